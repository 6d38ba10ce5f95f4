#include "hopfalg/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hopfalg/errors.hpp"

namespace hopfalg {

namespace {

struct GfOps {
  std::int64_t p;
  using T = std::int64_t;
  bool is_zero(T a) const { return a == 0; }
  T one() const { return 1; }
  T inv(T a) const { return mod_inverse(a, p); }
  T mul(T a, T b) const { return (a * b) % p; }
  void mul_in(T& a, T f) const { a = (a * f) % p; }
  // x -= f * y
  void submul(T& x, T f, T y) const {
    x = (x - (f * y) % p);
    if (x < 0) x += p;
  }
  void addmul(T& x, T f, T y) const { x = (x + f * y) % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
};

struct QOps {
  using T = mpq_class;
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T one() const { return T(1); }
  T inv(const T& a) const { return T(1) / a; }
  T mul(const T& a, const T& b) const { return T(a * b); }
  void mul_in(T& a, const T& f) const { a *= f; }
  void submul(T& x, const T& f, const T& y) const { x -= f * y; }
  void addmul(T& x, const T& f, const T& y) const { x += f * y; }
  T neg(const T& a) const { return T(-a); }
};

template <class Fn>
decltype(auto) dispatch(const Field& field, Fn&& fn) {
  if (field.is_prime()) return fn(GfOps{field.characteristic()});
  return fn(QOps{});
}

template <class T>
std::vector<T>& store(Mat& m);
template <>
std::vector<std::int64_t>& store<std::int64_t>(Mat& m) { return m.gf_data(); }
template <>
std::vector<mpq_class>& store<mpq_class>(Mat& m) { return m.q_data(); }
template <class T>
const std::vector<T>& cstore(const Mat& m);
template <>
const std::vector<std::int64_t>& cstore<std::int64_t>(const Mat& m) { return m.gf_data(); }
template <>
const std::vector<mpq_class>& cstore<mpq_class>(const Mat& m) { return m.q_data(); }

void require_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw DimensionError("matrices over different fields");
}

template <class Ops>
std::vector<std::size_t> rref_in_place(std::vector<typename Ops::T>& a, std::size_t rows,
                                       std::size_t cols, const Ops& ops) {
  using T = typename Ops::T;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;
    if (found != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[found * cols + j], a[r * cols + j]);
    }
    T inv = ops.inv(a[r * cols + c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      T& x = a[r * cols + j];
      if (!ops.is_zero(x)) {
        ops.mul_in(x, inv);
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = a[i * cols + c];
      if (ops.is_zero(f)) continue;
      for (std::size_t j : support) ops.submul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat::Mat(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime()) {
    gf_.assign(rows * cols, 0);
  } else {
    q_.assign(rows * cols, mpq_class(0));
  }
}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Mat Mat::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                   const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) throw DimensionError("from_ints: wrong entry count");
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m.set_int(i / cols, i % cols, entries[i]);
  return m;
}

Mat Mat::unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Mat m(field, n, 1);
  m.set_int(i, 0, 1);
  return m;
}

Mat Mat::hstack(const std::vector<Mat>& parts) {
  if (parts.empty()) throw DimensionError("hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw DimensionError("hstack row mismatch");
    cols += p.cols();
  }
  Mat out(parts[0].field(), parts[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Mat Mat::vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) throw DimensionError("vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw DimensionError("vstack column mismatch");
    rows += p.rows();
  }
  Mat out(parts[0].field(), rows, parts[0].cols());
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("index out of range");
  if (field_.is_prime()) return Scalar(field_, gf_[r * cols_ + c]);
  return Scalar(field_, q_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("index out of range");
  if (field_.is_prime()) {
    gf_[r * cols_ + c] = v.residue();
  } else {
    q_[r * cols_ + c] = v.rational();
  }
}

void Mat::set_int(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("index out of range");
  if (field_.is_prime()) {
    gf_[r * cols_ + c] = mod_reduce(v, field_.characteristic());
  } else {
    q_[r * cols_ + c] = static_cast<long>(v);
  }
}

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? gf_[r * cols_ + c] == 0 : sgn(q_[r * cols_ + c]) == 0;
}

bool Mat::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : gf_)
      if (v != 0) return false;
    return true;
  }
  for (const auto& v : q_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_prime() ? gf_ == o.gf_ : q_ == o.q_;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) {
    throw DimensionError("matmul shape mismatch " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
  }
  Mat out(field_, rows_, o.cols_);
  dispatch(field_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& a = cstore<T>(*this);
    const auto& b = cstore<T>(o);
    auto& c = store<T>(out);
    const std::size_t n = o.cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& f = a[i * cols_ + k];
        if (ops.is_zero(f)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const T& y = b[k * n + j];
          if (ops.is_zero(y)) continue;
          ops.addmul(c[i * n + j], f, y);
        }
      }
    }
    return 0;
  });
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out = *this;
  out.add_scaled_int(o, 1);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  Mat out = *this;
  out.add_scaled_int(o, -1);
  return out;
}

Mat Mat::operator-() const {
  Mat out(field_, rows_, cols_);
  out.add_scaled_int(*this, -1);
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out(field_, rows_, cols_);
  out.add_scaled(*this, s);
  return out;
}

void Mat::add_scaled(const Mat& o, const Scalar& s) {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("add shape mismatch");
  if (field_.is_prime()) {
    GfOps ops{field_.characteristic()};
    for (std::size_t i = 0; i < gf_.size(); ++i) ops.addmul(gf_[i], s.residue(), o.gf_[i]);
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) {
      if (sgn(o.q_[i]) != 0) q_[i] += s.rational() * o.q_[i];
    }
  }
}

void Mat::add_scaled_int(const Mat& o, std::int64_t s) { add_scaled(o, Scalar(field_, s)); }

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  dispatch(field_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& a = cstore<T>(*this);
    auto& b = store<T>(out);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b[j * rows_ + i] = a[i * cols_ + j];
    return 0;
  });
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Mat out(field_, nr, nc);
  dispatch(field_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& a = cstore<T>(*this);
    auto& b = store<T>(out);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
    return 0;
  });
  return out;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  require_same_field(*this, m);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("set_block out of range");
  dispatch(field_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& a = cstore<T>(m);
    auto& b = store<T>(*this);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) b[(r0 + i) * cols_ + c0 + j] = a[i * m.cols_ + j];
    return 0;
  });
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) out.set_block(0, j, col(idx[j]));
  return out;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.set_block(i, 0, row(idx[i]));
  return out;
}

Mat Mat::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != rows_ * cols_) throw DimensionError("reshape size mismatch");
  Mat out = *this;
  out.rows_ = rows;
  out.cols_ = cols;
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  res.pivots = dispatch(m.field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    return rref_in_place(store<T>(res.form), m.rows(), m.cols(), ops);
  });
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  auto [form, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(m.field(), free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.set_int(k, f, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!form.entry_is_zero(r, f)) basis.set(k, pivots[r], -form.at(r, f));
    }
  }
  return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: a.rows != b.rows");
  const std::size_t n = a.cols();
  auto [form, pivots] = rref(Mat::hstack({a, b}));
  Mat x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!form.entry_is_zero(r, n + j)) x.set(pivots[r], j, form.at(r, n + j));
    }
  }
  return x;
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw Singular("invert: matrix is not square");
  const std::size_t n = m.rows();
  auto [form, pivots] = rref(Mat::hstack({m, Mat::identity(m.field(), n)}));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw Singular("matrix is singular");
  return form.block(0, n, n, n);
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  dispatch(a.field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& x = cstore<T>(a);
    const auto& y = cstore<T>(b);
    auto& z = store<T>(out);
    const std::size_t oc = out.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const T& f = x[i * a.cols() + j];
        if (ops.is_zero(f)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) {
            const T& g = y[k * b.cols() + l];
            if (ops.is_zero(g)) continue;
            z[(i * b.rows() + k) * oc + j * b.cols() + l] = ops.mul(f, g);
          }
      }
    return 0;
  });
  return out;
}

Mat kron(const std::vector<Mat>& factors) {
  if (factors.empty()) throw DimensionError("kron of nothing");
  Mat out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

Mat apply_kron(const Mat& a, const Mat& b, const Mat& x) {
  if (x.rows() != a.cols() * b.cols()) throw DimensionError("apply_kron shape mismatch");
  Mat y = apply_slot({a.cols(), b.cols()}, 1, b, x);
  return apply_slot({a.cols(), b.rows()}, 0, a, y);
}

Mat right_mul_kron(const Mat& m, const Mat& a, const Mat& b) {
  return apply_kron(a.transpose(), b.transpose(), m.transpose()).transpose();
}

Mat apply_slot(const std::vector<std::size_t>& dims, std::size_t slot, const Mat& op, const Mat& x) {
  require_same_field(op, x);
  std::size_t pre = 1, post = 1;
  for (std::size_t s = 0; s < slot; ++s) pre *= dims[s];
  for (std::size_t s = slot + 1; s < dims.size(); ++s) post *= dims[s];
  const std::size_t d = dims[slot];
  if (op.cols() != d || x.rows() != pre * d * post) throw DimensionError("apply_slot shape mismatch");
  const std::size_t e = op.rows();
  Mat out(x.field(), pre * e * post, x.cols());
  // rows (p, k, q) of x map to rows (p, r, q); each (p, k) is a contiguous run
  const std::size_t run = post * x.cols();
  dispatch(x.field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const auto& o = cstore<T>(op);
    const auto& in = cstore<T>(x);
    auto& z = store<T>(out);
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        const T& f = o[r * d + k];
        if (ops.is_zero(f)) continue;
        for (std::size_t p = 0; p < pre; ++p) {
          const T* src = &in[(p * d + k) * run];
          T* dst = &z[(p * e + r) * run];
          for (std::size_t j = 0; j < run; ++j) {
            if (ops.is_zero(src[j])) continue;
            ops.addmul(dst[j], f, src[j]);
          }
        }
      }
    return 0;
  });
  return out;
}

Mat apply_slots(std::vector<std::size_t> dims, const std::vector<Mat>& ops, const Mat& x) {
  if (ops.size() != dims.size()) throw DimensionError("apply_slots: one op per slot expected");
  Mat out = x;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (ops[s].rows() == 0 && ops[s].cols() == 0) continue;
    out = apply_slot(dims, s, ops[s], out);
    dims[s] = ops[s].rows();
  }
  return out;
}

Mat permute_slots(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm, const Mat& x) {
  const std::size_t r = dims.size();
  if (perm.size() != r) throw DimensionError("permute_slots: perm size");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (x.rows() != total) throw DimensionError("permute_slots shape mismatch");
  std::vector<std::size_t> out_dims(r);
  for (std::size_t j = 0; j < r; ++j) out_dims[j] = dims[perm[j]];
  Mat out(x.field(), total, x.cols());
  const std::size_t nc = x.cols();
  std::vector<std::size_t> idx(r, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t s = r; s-- > 0;) {
      idx[s] = rem % dims[s];
      rem /= dims[s];
    }
    std::size_t target = 0;
    for (std::size_t j = 0; j < r; ++j) target = target * out_dims[j] + idx[perm[j]];
    if (x.field().is_prime()) {
      std::copy_n(x.gf_data().begin() + flat * nc, nc, out.gf_data().begin() + target * nc);
    } else {
      std::copy_n(x.q_data().begin() + flat * nc, nc, out.q_data().begin() + target * nc);
    }
  }
  return out;
}

Mat left_inverse(const Mat& b) {
  auto [form, pivots] = rref(b.transpose());
  if (pivots.size() != b.cols()) throw Singular("left_inverse: columns are dependent");
  Mat square = b.select_rows(pivots);
  Mat inv = invert(square);
  Mat out(b.field(), b.cols(), b.rows());
  for (std::size_t k = 0; k < pivots.size(); ++k) out.set_block(0, pivots[k], inv.col(k));
  return out;
}

Mat row_space_basis(const Mat& m) {
  auto [form, pivots] = rref(m);
  return form.block(0, 0, pivots.size(), m.cols());
}

bool in_column_span(const Mat& a, const Mat& b) { return solve(a, b).has_value(); }

Mat permute_factors(const Field& field, const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& perm) {
  const std::size_t r = dims.size();
  if (perm.size() != r) throw DimensionError("permute_factors: perm size");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out_dims(r);
  for (std::size_t j = 0; j < r; ++j) out_dims[j] = dims[perm[j]];
  Mat out(field, total, total);
  std::vector<std::size_t> idx(r, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t s = r; s-- > 0;) {
      idx[s] = rem % dims[s];
      rem /= dims[s];
    }
    std::size_t target = 0;
    for (std::size_t j = 0; j < r; ++j) target = target * out_dims[j] + idx[perm[j]];
    out.set_int(target, flat, 1);
  }
  return out;
}

QuotientPresentation quotient(const Field& field, std::size_t ambient_dim, const Mat& relations) {
  QuotientPresentation q;
  q.ambient_dim = ambient_dim;
  if (relations.rows() == 0) {
    q.relation_basis = Mat(field, 0, ambient_dim);
    q.proj = Mat::identity(field, ambient_dim);
    q.sect = Mat::identity(field, ambient_dim);
    return q;
  }
  if (relations.cols() != ambient_dim) throw DimensionError("quotient: relation width");
  auto [form, pivots] = rref(relations);
  q.relation_basis = form.block(0, 0, pivots.size(), ambient_dim);
  std::vector<int> pivot_row(ambient_dim, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> free_index(ambient_dim, 0);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (pivot_row[c] < 0) {
      free_index[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  const std::size_t qd = free_cols.size();
  q.proj = Mat(field, qd, ambient_dim);
  q.sect = Mat(field, ambient_dim, qd);
  for (std::size_t k = 0; k < qd; ++k) {
    q.proj.set_int(k, free_cols[k], 1);
    q.sect.set_int(free_cols[k], k, 1);
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t k = 0; k < qd; ++k) {
      if (!q.relation_basis.entry_is_zero(r, free_cols[k])) {
        q.proj.set(k, pivots[r], -q.relation_basis.at(r, free_cols[k]));
      }
    }
  }
  return q;
}

}  // namespace hopfalg
