#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/field.hpp"

namespace hopfalg {

// Dense row-major matrix over GF(p) or Q. Vectors are n x 1 matrices.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& field, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& field, std::size_t n);
  static Mat from_ints(const Field& field, std::size_t rows, std::size_t cols,
                       const std::vector<std::int64_t>& entries);
  static Mat unit_vector(const Field& field, std::size_t n, std::size_t i);
  static Mat hstack(const std::vector<Mat>& parts);
  static Mat vstack(const std::vector<Mat>& parts);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set_int(std::size_t r, std::size_t c, std::int64_t v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  // this += s * o
  void add_scaled(const Mat& o, const Scalar& s);
  void add_scaled_int(const Mat& o, std::int64_t s);

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat col(std::size_t j) const { return block(0, j, rows_, 1); }
  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  // Row-major reinterpretation.
  Mat reshaped(std::size_t rows, std::size_t cols) const;

  std::string to_string() const;

  // Raw storage, only one of the two is populated depending on the field.
  const std::vector<std::int64_t>& gf_data() const { return gf_; }
  const std::vector<mpq_class>& q_data() const { return q_; }
  std::vector<std::int64_t>& gf_data() { return gf_; }
  std::vector<mpq_class>& q_data() { return q_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> gf_;
  std::vector<mpq_class> q_;
};

struct RrefResult {
  Mat form;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
// Rows form a basis of the right kernel {v : m v = 0}.
Mat kernel_basis(const Mat& m);
// Some x with a x = b (b may have several columns), or nullopt.
std::optional<Mat> solve(const Mat& a, const Mat& b);
Mat invert(const Mat& m);
Mat kron(const Mat& a, const Mat& b);
Mat kron(const std::vector<Mat>& factors);
// kron(a, b) * x without forming the Kronecker product.
Mat apply_kron(const Mat& a, const Mat& b, const Mat& x);
// m * kron(a, b) without forming the Kronecker product.
Mat right_mul_kron(const Mat& m, const Mat& a, const Mat& b);
// Applies op to tensor slot `slot` of every column of x; dims are the slot sizes.
Mat apply_slot(const std::vector<std::size_t>& dims, std::size_t slot, const Mat& op, const Mat& x);
// Applies ops[j] to tensor slot j of every column of x; an empty op means identity.
Mat apply_slots(std::vector<std::size_t> dims, const std::vector<Mat>& ops, const Mat& x);
// Reorders the tensor slots of every column: slot j of the result is slot perm[j] of x.
Mat permute_slots(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm, const Mat& x);
// Returns L with L * b = identity; b must have full column rank.
Mat left_inverse(const Mat& b);
// Nonzero rows of the reduced row-echelon form.
Mat row_space_basis(const Mat& m);
bool in_column_span(const Mat& a, const Mat& b);

// Permutation matrix sending v_0 (x) ... (x) v_{r-1} to the tensor whose
// slot j holds v_{perm[j]}.
Mat permute_factors(const Field& field, const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& perm);

struct QuotientPresentation {
  std::size_t ambient_dim = 0;
  Mat relation_basis;
  Mat proj;
  Mat sect;
  std::size_t dim() const { return proj.rows(); }
};

QuotientPresentation quotient(const Field& field, std::size_t ambient_dim, const Mat& relations);

}  // namespace hopfalg
