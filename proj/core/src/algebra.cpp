#include "hopfalg/algebra.hpp"

#include <string>

#include "hopfalg/errors.hpp"

namespace hopfalg {

Algebra::Algebra(const Field& field, std::size_t dim, const std::vector<std::vector<Mat>>& products,
                 const Mat& unit)
    : field_(field), dim_(dim), unit_(unit) {
  if (products.size() != dim || unit.rows() != dim || unit.cols() != 1) {
    throw DimensionError("algebra: structure constant shape");
  }
  left_.assign(dim, Mat(field, dim, dim));
  right_.assign(dim, Mat(field, dim, dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (products[i].size() != dim) throw DimensionError("algebra: structure constant shape");
    for (std::size_t j = 0; j < dim; ++j) {
      const Mat& c = products[i][j];
      if (c.rows() != dim || c.cols() != 1) throw DimensionError("algebra: product column shape");
      left_[i].set_block(0, j, c);
      right_[j].set_block(0, i, c);
    }
  }
}

Mat Algebra::left_mult(const Mat& a) const {
  Mat out(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a.entry_is_zero(i, 0)) out.add_scaled(left_[i], a.at(i, 0));
  return out;
}

Mat Algebra::right_mult(const Mat& a) const {
  Mat out(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a.entry_is_zero(i, 0)) out.add_scaled(right_[i], a.at(i, 0));
  return out;
}

Mat Algebra::mul_matrix() const {
  Mat out(field_, dim_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.set_block(0, i * dim_, left_[i]);
  return out;
}

Report check_algebra(const Algebra& a) {
  Report r;
  const std::size_t n = a.dim();
  bool assoc = true;
  for (std::size_t i = 0; i < n && assoc; ++i)
    for (std::size_t j = 0; j < n && assoc; ++j)
      for (std::size_t l = 0; l < n && assoc; ++l) {
        Mat lhs = a.mul(a.product(i, j), a.basis(l));
        Mat rhs = a.mul(a.basis(i), a.product(j, l));
        if (!(lhs == rhs)) {
          assoc = false;
          r.record("Algebra/assoc", false,
                   "(i,j,l)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(l) + "): lhs=" + lhs.transpose().to_string() +
                       " rhs=" + rhs.transpose().to_string());
        }
      }
  if (assoc) r.record("Algebra/assoc", true);
  Mat id = Mat::identity(a.field(), n);
  bool unit_ok = a.left_mult(a.unit()) == id && a.right_mult(a.unit()) == id;
  r.record("Algebra/unit", unit_ok, unit_ok ? "" : "unit is not a two-sided identity");
  return r;
}

AlgebraPtr algebra_from_constants(const Field& field, std::size_t dim,
                                  const std::vector<std::int64_t>& constants,
                                  const std::vector<std::int64_t>& unit) {
  if (constants.size() != dim * dim * dim || unit.size() != dim) {
    throw DimensionError("algebra_from_constants: size");
  }
  std::vector<std::vector<Mat>> prod(dim, std::vector<Mat>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<std::int64_t> col(constants.begin() + static_cast<long>((i * dim + j) * dim),
                                    constants.begin() + static_cast<long>((i * dim + j + 1) * dim));
      prod[i][j] = Mat::from_ints(field, dim, 1, col);
    }
  return std::make_shared<Algebra>(field, dim, prod, Mat::from_ints(field, dim, 1, unit));
}

AlgebraPtr algebra_ground(const Field& field) { return algebra_product(field, 1); }

AlgebraPtr algebra_product(const Field& field, std::size_t copies) {
  std::vector<std::int64_t> c(copies * copies * copies, 0);
  for (std::size_t i = 0; i < copies; ++i) c[(i * copies + i) * copies + i] = 1;
  return algebra_from_constants(field, copies, c, std::vector<std::int64_t>(copies, 1));
}

AlgebraPtr algebra_truncated_polynomial(const Field& field, std::size_t n) {
  std::vector<std::int64_t> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) c[(i * n + j) * n + i + j] = 1;
  std::vector<std::int64_t> u(n, 0);
  u[0] = 1;
  return algebra_from_constants(field, n, c, u);
}

AlgebraPtr algebra_matrix2(const Field& field) {
  // index(r,s) = 2r+s ; E_rs E_tu = delta_st E_ru
  std::vector<std::int64_t> c(64, 0);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        for (int u = 0; u < 2; ++u)
          if (s == t) c[((2 * r + s) * 4 + (2 * t + u)) * 4 + 2 * r + u] = 1;
  return algebra_from_constants(field, 4, c, {1, 0, 0, 1});
}

AlgebraPtr algebra_upper_triangular2(const Field& field) {
  // basis E11(0), E12(1), E22(2)
  const int idx[2][2] = {{0, 1}, {-1, 2}};
  std::vector<std::int64_t> c(27, 0);
  for (int r = 0; r < 2; ++r)
    for (int s = r; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        for (int u = t; u < 2; ++u)
          if (s == t) c[(idx[r][s] * 3 + idx[t][u]) * 3 + idx[r][u]] = 1;
  return algebra_from_constants(field, 3, c, {1, 0, 1});
}

AlgebraPtr algebra_change_basis(const Algebra& a, const Mat& p) {
  const std::size_t n = a.dim();
  Mat pinv = invert(p);
  std::vector<std::vector<Mat>> prod(n, std::vector<Mat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = pinv * a.mul(p.col(i), p.col(j));
  return std::make_shared<Algebra>(a.field(), n, prod, pinv * a.unit());
}

Mat random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Mat m(field, rows, cols);
  std::int64_t bound = field.is_prime() ? field.characteristic() : 7;
  std::uniform_int_distribution<std::int64_t> dist(0, bound - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, field.is_prime() ? dist(rng) : dist(rng) - 3);
  return m;
}

Mat random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace hopfalg
