#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hopfalg::testing {

std::string fixture_path(const std::string& name) { return std::string(HOPFALG_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load_fixture(const std::string& name) { return parse_document(read_file(fixture_path(name))); }

Presentation load_presentation(const std::string& name) {
  Document d = load_fixture(name);
  if (!d.presentation) throw std::runtime_error(name + " has no presentation");
  return *d.presentation;
}

Presentation triv_presentation(const AlgebraPtr& r) {
  const Field& field = r->field();
  const std::size_t n = r->dim();
  Presentation p;
  p.algebra = r;
  p.objects.push_back({"I", regular_bimodule(r)});
  p.tensor.push_back({"I", "I", "I", r->mul_matrix()});
  Mat db(field, n * n, n);
  for (std::size_t a = 0; a < n; ++a) db.set_block(0, a, kron(r->basis(a), r->unit()));
  p.duals.push_back({"I", "I", r->mul_matrix(), db});
  p.right_duals.push_back({"I", "I", r->mul_matrix(), db});
  p.unit_object = "I";
  p.unit_iso = Mat::identity(field, n);
  return p;
}

BialgebroidPtr group_algebra_c2(const Field& field) {
  Mat product = Mat::from_ints(field, 2, 4, {1, 0, 0, 1, 0, 1, 1, 0});
  Mat unit = Mat::from_ints(field, 2, 1, {1, 0});
  Mat coproduct = Mat::from_ints(field, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  Mat counit = Mat::from_ints(field, 1, 2, {1, 1});
  return classical_bialgebra(field, 2, product, unit, coproduct, counit);
}

BialgebroidPtr monoid_bialgebra(const Field& field) {
  // basis 1, x with x^2 = x
  Mat product = Mat::from_ints(field, 2, 4, {1, 0, 0, 0, 0, 1, 1, 1});
  Mat unit = Mat::from_ints(field, 2, 1, {1, 0});
  Mat coproduct = Mat::from_ints(field, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  Mat counit = Mat::from_ints(field, 1, 2, {1, 1});
  return classical_bialgebra(field, 2, product, unit, coproduct, counit);
}

std::vector<AlgebraPtr> small_algebras(const Field& field) {
  return {algebra_ground(field),
          algebra_product(field, 2),
          algebra_truncated_polynomial(field, 2),
          algebra_upper_triangular2(field),
          algebra_product(field, 3),
          algebra_truncated_polynomial(field, 3),
          algebra_matrix2(field),
          algebra_truncated_polynomial(field, 4)};
}

namespace {

std::vector<Mat> central_idempotents(const Algebra& r) {
  const Field& field = r.field();
  const std::size_t n = r.dim();
  std::vector<Mat> candidates{Mat(field, n, 1), r.unit()};
  for (std::size_t i = 0; i < n; ++i) {
    candidates.push_back(r.basis(i));
    for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(r.basis(i) + r.basis(j));
  }
  std::vector<Mat> out;
  for (const auto& c : candidates) {
    if (!(r.mul(c, c) == c)) continue;
    if (!(r.left_mult(c) == r.right_mult(c))) continue;
    bool seen = false;
    for (const auto& o : out) seen = seen || o == c;
    if (!seen) out.push_back(c);
  }
  return out;
}

Bimodule restrict_to(const Bimodule& big, const Mat& basis) {
  Mat li = left_inverse(basis);
  Bimodule m;
  m.algebra = big.algebra;
  m.dim = basis.cols();
  ActionFamily left, right;
  for (const auto& a : *big.left) left.push_back(li * a * basis);
  for (const auto& a : *big.right) right.push_back(li * a * basis);
  m.left = left;
  m.right = right;
  return m;
}

}  // namespace

Bimodule random_summand(const AlgebraPtr& r, std::size_t max_dim, std::mt19937_64& rng) {
  const Field& field = r->field();
  const std::size_t n = r->dim();
  const std::vector<Mat> idem = central_idempotents(*r);
  const Bimodule free3 = free_bimodule(r, 3);
  for (;;) {
    std::vector<Mat> d;
    for (int i = 0; i < 3; ++i) d.push_back(idem[rng() % idem.size()]);
    Mat p = random_invertible(field, 3, rng);
    Mat pinv = invert(p);
    Mat e(field, 3 * n, 3 * n);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Mat entry(field, n, 1);
        for (std::size_t k = 0; k < 3; ++k) entry.add_scaled(d[k], p.at(i, k) * pinv.at(k, j));
        e.set_block(i * n, j * n, r->left_mult(entry));
      }
    Mat image = row_space_basis(e.transpose()).transpose();
    const std::size_t dim = image.cols();
    if (dim == 0 || dim > max_dim) continue;
    Mat basis = image * random_invertible(field, dim, rng);
    return restrict_to(free3, basis);
  }
}

Bimodule random_nonprojective(const Field& field, std::mt19937_64& rng, AlgebraPtr& r) {
  for (;;) {
    const std::size_t m = 2 + rng() % 3;
    r = algebra_truncated_polynomial(field, m);
    const std::size_t j = 1 + rng() % (m - 1);
    const std::size_t a = 1 + rng() % 2, b = rng() % 2;
    if (a * j + b * m > 6) continue;
    Bimodule q;
    q.algebra = r;
    q.dim = j;
    ActionFamily act;
    for (std::size_t k = 0; k < m; ++k) {
      Mat x(field, j, j);
      for (std::size_t c = 0; c + k < j; ++c) x.set_int(c + k, c, 1);
      act.push_back(x);
    }
    q.left = act;
    q.right = act;
    std::vector<Bimodule> parts(a, q);
    for (std::size_t i = 0; i < b; ++i) parts.push_back(regular_bimodule(r));
    Bimodule sum = direct_sum(parts);
    return change_basis(sum, random_invertible(field, sum.dim, rng));
  }
}

}  // namespace hopfalg::testing
