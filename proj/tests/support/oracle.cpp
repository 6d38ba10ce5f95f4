#include "oracle.hpp"

#include <map>

namespace hopfalg::oracle {

namespace {

struct Echelon {
  Rows rows;
  std::vector<std::size_t> pivots;
};

Echelon reduce(Rows rows, std::size_t cols, const Field& field) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = Scalar(field, 1) / rows[r][c];
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::vector<Scalar> zeros(const Field& field, std::size_t n) { return std::vector<Scalar>(n, Scalar(field, 0)); }

Rows multiply(const Rows& a, const Rows& b, std::size_t inner, std::size_t cols, const Field& field) {
  Rows out(a.size(), zeros(field, cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

Rows kron_identity_right(const Rows& f, std::size_t fcols, std::size_t z, const Field& field) {
  Rows out(f.size() * z, zeros(field, fcols * z));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < fcols; ++j)
      for (std::size_t t = 0; t < z; ++t) out[i * z + t][j * z + t] = f[i][j];
  return out;
}

Rows kron_identity_left(std::size_t z, const Rows& f, std::size_t fcols, const Field& field) {
  Rows out(z * f.size(), zeros(field, z * fcols));
  for (std::size_t t = 0; t < z; ++t)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < fcols; ++j) out[t * f.size() + i][t * fcols + j] = f[i][j];
  return out;
}

// Right inverse of a surjective theta.
Rows right_inverse(const Rows& theta, std::size_t cols, const Field& field) {
  const std::size_t rows = theta.size();
  Rows out(cols, zeros(field, rows));
  for (std::size_t z = 0; z < rows; ++z) {
    std::vector<Scalar> b = zeros(field, rows);
    b[z] = Scalar(field, 1);
    auto x = solve(theta, cols, b, field);
    if (!x) throw std::runtime_error("oracle: theta is not surjective");
    for (std::size_t c = 0; c < cols; ++c) out[c][z] = (*x)[c];
  }
  return out;
}

struct OracleArrow {
  std::string src, dst;
  Rows matrix;
};

}  // namespace

Rows to_rows(const Mat& m) {
  Rows out(m.rows(), zeros(m.field(), m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  return out;
}

std::size_t rank(Rows rows, const Field& field) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return reduce(std::move(rows), cols, field).pivots.size();
}

std::vector<std::vector<Scalar>> nullspace(const Rows& a, std::size_t cols, const Field& field) {
  Echelon e = reduce(a, cols, field);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v = zeros(field, cols);
    v[f] = Scalar(field, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Rows& a, std::size_t cols, const std::vector<Scalar>& b,
                                         const Field& field) {
  Rows aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = reduce(aug, cols + 1, field);
  std::vector<Scalar> x = zeros(field, cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

std::vector<std::vector<Scalar>> right_functionals(const Algebra& r, std::size_t dim, const ActionFamily& right) {
  const Field& field = r.field();
  const std::size_t n = r.dim();
  // phi T_a - R_a phi = 0, unknown phi[row][col] at row * dim + col
  Rows eqs;
  for (std::size_t a = 0; a < n; ++a) {
    Rows t = to_rows(right[a]);
    Rows ra = to_rows(r.right_mult_basis(a));
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Scalar> eq = zeros(field, n * dim);
        for (std::size_t k = 0; k < dim; ++k) eq[row * dim + k] = eq[row * dim + k] + t[k][col];
        for (std::size_t k = 0; k < n; ++k) eq[k * dim + col] = eq[k * dim + col] - ra[row][k];
        eqs.push_back(std::move(eq));
      }
  }
  return nullspace(eqs, n * dim, field);
}

std::size_t coend_dim(const Presentation& p) {
  const Field& field = p.field();
  const Algebra& r = *p.algebra;
  const std::size_t n = r.dim();

  std::map<std::string, std::size_t> dim;
  std::map<std::string, std::vector<std::vector<Scalar>>> hom;
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const auto& o : p.objects) {
    dim[o.name] = o.module.dim;
    hom[o.name] = right_functionals(r, o.module.dim, *o.module.right);
    offset[o.name] = total;
    total += hom[o.name].size() * o.module.dim;
  }
  auto theta = [&](const std::string& a, const std::string& b) -> const TensorEntry* {
    for (const auto& t : p.tensor)
      if (t.left == a && t.right == b) return &t;
    return nullptr;
  };

  std::vector<OracleArrow> base;
  for (const auto& m : p.morphisms)
    if (m.origin == MorphismOrigin::generator) base.push_back({m.src, m.dst, to_rows(m.matrix)});
  for (const auto& d : p.duals) {
    if (const TensorEntry* t = theta(d.dual, d.object)) {
      Rows pre = right_inverse(to_rows(t->theta), t->theta.cols(), field);
      base.push_back({t->result, p.unit_object, multiply(to_rows(d.ev), pre, t->theta.cols(), dim[t->result], field)});
    }
    if (const TensorEntry* t = theta(d.object, d.dual))
      base.push_back({p.unit_object, t->result, multiply(to_rows(t->theta), to_rows(d.db), t->theta.cols(), d.db.cols(), field)});
  }
  for (const auto& d : p.right_duals) {
    if (const TensorEntry* t = theta(d.object, d.dual)) {
      Rows pre = right_inverse(to_rows(t->theta), t->theta.cols(), field);
      base.push_back({t->result, p.unit_object, multiply(to_rows(d.ev), pre, t->theta.cols(), dim[t->result], field)});
    }
    if (const TensorEntry* t = theta(d.dual, d.object))
      base.push_back({p.unit_object, t->result, multiply(to_rows(t->theta), to_rows(d.db), t->theta.cols(), d.db.cols(), field)});
  }
  std::vector<OracleArrow> arrows = base;
  for (const auto& f : base) {
    const std::size_t ds = dim[f.src], dd = dim[f.dst];
    for (const auto& z : p.objects) {
      const std::size_t dz = z.module.dim;
      const TensorEntry* a = theta(f.src, z.name);
      const TensorEntry* b = theta(f.dst, z.name);
      if (a && b) {
        Rows pre = right_inverse(to_rows(a->theta), ds * dz, field);
        Rows mid = multiply(kron_identity_right(f.matrix, ds, dz, field), pre, ds * dz, dim[a->result], field);
        arrows.push_back({a->result, b->result, multiply(to_rows(b->theta), mid, dd * dz, dim[a->result], field)});
      }
      a = theta(z.name, f.src);
      b = theta(z.name, f.dst);
      if (a && b) {
        Rows pre = right_inverse(to_rows(a->theta), dz * ds, field);
        Rows mid = multiply(kron_identity_left(dz, f.matrix, ds, field), pre, dz * ds, dim[a->result], field);
        arrows.push_back({a->result, b->result, multiply(to_rows(b->theta), mid, dz * dd, dim[a->result], field)});
      }
    }
  }

  // coordinates of a functional in the Hom basis of x
  auto coords = [&](const std::string& x, const std::vector<Scalar>& phi) {
    const auto& basis = hom[x];
    Rows a(phi.size(), zeros(field, basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < phi.size(); ++i) a[i][k] = basis[k][i];
    auto c = solve(a, basis.size(), phi, field);
    if (!c) throw std::runtime_error("oracle: composite is not a module map");
    return *c;
  };

  Rows relations;
  for (const auto& f : arrows) {
    const std::size_t dx = dim[f.src], dy = dim[f.dst];
    const auto& hy = hom[f.dst];
    for (std::size_t s = 0; s < hy.size(); ++s) {
      // psi o f as an n x dx matrix
      std::vector<Scalar> pf = zeros(field, n * dx);
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < dx; ++col)
          for (std::size_t k = 0; k < dy; ++k) pf[row * dx + col] = pf[row * dx + col] + hy[s][row * dy + k] * f.matrix[k][col];
      std::vector<Scalar> c = coords(f.src, pf);
      for (std::size_t i = 0; i < dx; ++i) {
        std::vector<Scalar> rel = zeros(field, total);
        for (std::size_t t = 0; t < c.size(); ++t) rel[offset[f.src] + t * dx + i] = rel[offset[f.src] + t * dx + i] + c[t];
        for (std::size_t j = 0; j < dy; ++j)
          rel[offset[f.dst] + s * dy + j] = rel[offset[f.dst] + s * dy + j] - f.matrix[j][i];
        relations.push_back(std::move(rel));
      }
    }
  }
  if (relations.empty()) return total;
  return total - rank(relations, field);
}

}  // namespace hopfalg::oracle
