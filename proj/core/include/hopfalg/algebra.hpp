#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hopfalg/matrix.hpp"
#include "hopfalg/report.hpp"

namespace hopfalg {

// Finite-dimensional associative unital algebra given by structure constants.
class Algebra {
 public:
  // products[i][j] is the coefficient column of e_i e_j.
  Algebra(const Field& field, std::size_t dim, const std::vector<std::vector<Mat>>& products,
          const Mat& unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& unit() const { return unit_; }
  Mat basis(std::size_t i) const { return Mat::unit_vector(field_, dim_, i); }
  Mat product(std::size_t i, std::size_t j) const { return left_[i].col(j); }

  // Matrices of x -> a x and x -> x a for a coefficient column a.
  Mat left_mult(const Mat& a) const;
  Mat right_mult(const Mat& a) const;
  const Mat& left_mult_basis(std::size_t i) const { return left_[i]; }
  const Mat& right_mult_basis(std::size_t i) const { return right_[i]; }
  Mat mul(const Mat& a, const Mat& b) const { return left_mult(a) * b; }
  // Multiplication R (x)_k R -> R as an n x n^2 matrix.
  Mat mul_matrix() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
  Mat unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Report check_algebra(const Algebra& a);

AlgebraPtr algebra_ground(const Field& field);
AlgebraPtr algebra_product(const Field& field, std::size_t copies);
// k[x]/(x^n)
AlgebraPtr algebra_truncated_polynomial(const Field& field, std::size_t n);
// Basis E11, E12, E21, E22.
AlgebraPtr algebra_matrix2(const Field& field);
// Upper triangular 2x2 matrices, basis E11, E12, E22.
AlgebraPtr algebra_upper_triangular2(const Field& field);
// Same algebra expressed in the basis given by the columns of p (invertible).
AlgebraPtr algebra_change_basis(const Algebra& a, const Mat& p);
AlgebraPtr algebra_from_constants(const Field& field, std::size_t dim,
                                  const std::vector<std::int64_t>& constants,
                                  const std::vector<std::int64_t>& unit);

Mat random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Mat random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng);

}  // namespace hopfalg
