#include "hopfalg/bimodule.hpp"

#include "hopfalg/errors.hpp"

namespace hopfalg {

bool is_left(ActionSelector s) {
  return s == ActionSelector::sigma_left || s == ActionSelector::tau_left;
}

const char* selector_name(ActionSelector s) {
  switch (s) {
    case ActionSelector::sigma_left:
      return "sigma_left";
    case ActionSelector::sigma_right:
      return "sigma_right";
    case ActionSelector::tau_left:
      return "tau_left";
    case ActionSelector::tau_right:
      return "tau_right";
  }
  return "?";
}

ActionSelector parse_selector(const std::string& name) {
  for (auto s : {ActionSelector::sigma_left, ActionSelector::sigma_right, ActionSelector::tau_left,
                 ActionSelector::tau_right}) {
    if (name == selector_name(s)) return s;
  }
  throw InvalidSelector("unknown action selector " + name);
}

Mat act(const ActionFamily& family, const Mat& a) {
  if (family.empty()) throw DimensionError("empty action family");
  Mat out(family[0].field(), family[0].rows(), family[0].cols());
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!a.entry_is_zero(i, 0)) out.add_scaled(family[i], a.at(i, 0));
  return out;
}

DoubleBimodule::DoubleBimodule(AlgebraPtr algebra, std::size_t dim)
    : algebra_(std::move(algebra)), dim_(dim) {}

DoubleBimodule DoubleBimodule::from_bimodule(const Bimodule& m) {
  DoubleBimodule d(m.algebra, m.dim);
  if (m.left) d.set(ActionSelector::tau_left, *m.left);
  if (m.right) d.set(ActionSelector::tau_right, *m.right);
  d.plain_ = true;
  return d;
}

std::size_t DoubleBimodule::slot(ActionSelector s) const {
  if (plain_) {
    if (s == ActionSelector::sigma_left) s = ActionSelector::tau_left;
    if (s == ActionSelector::sigma_right) s = ActionSelector::tau_right;
  }
  return static_cast<std::size_t>(s);
}

bool DoubleBimodule::has(ActionSelector s) const { return actions_[slot(s)].has_value(); }

const ActionFamily& DoubleBimodule::family(ActionSelector s) const {
  const auto& f = actions_[slot(s)];
  if (!f) throw InvalidSelector(std::string("module carries no ") + selector_name(s) + " action");
  return *f;
}

Mat DoubleBimodule::act(ActionSelector s, const Mat& a) const { return hopfalg::act(family(s), a); }

void DoubleBimodule::set(ActionSelector s, ActionFamily f) {
  if (f.size() != algebra_->dim()) throw DimensionError("action family length differs from dim R");
  for (const auto& m : f)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("action matrix shape");
  actions_[static_cast<std::size_t>(s)] = std::move(f);
}

Bimodule DoubleBimodule::tau_pair() const {
  return Bimodule{algebra_, dim_, actions_[slot(ActionSelector::tau_left)],
                  actions_[slot(ActionSelector::tau_right)]};
}

Bimodule DoubleBimodule::sigma_pair() const {
  return Bimodule{algebra_, dim_, actions_[slot(ActionSelector::sigma_left)],
                  actions_[slot(ActionSelector::sigma_right)]};
}

namespace {

void check_family(Report& r, const Algebra& alg, const ActionFamily& f, bool left,
                  const std::string& what) {
  const std::size_t n = alg.dim();
  const char* hom_tag = left ? "Bimodule/left-hom" : "Bimodule/right-antihom";
  const char* unit_tag = left ? "Bimodule/left-unit" : "Bimodule/right-unit";
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      Mat lhs = f[i] * f[j];
      Mat rhs = left ? act(f, alg.product(i, j)) : act(f, alg.product(j, i));
      if (!(lhs == rhs)) {
        ok = false;
        r.record(hom_tag, false, what + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  if (ok) r.record(hom_tag, true);
  const std::size_t d = f[0].rows();
  bool unit_ok = act(f, alg.unit()) == Mat::identity(alg.field(), d);
  r.record(unit_tag, unit_ok, unit_ok ? "" : what + " does not fix the unit");
}

bool families_commute(const ActionFamily& a, const ActionFamily& b, std::string& where) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!(a[i] * b[j] == b[j] * a[i])) {
        where = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
  return true;
}

}  // namespace

Report check_bimodule(const Bimodule& m) {
  Report r;
  if (m.left) check_family(r, *m.algebra, *m.left, true, "left");
  if (m.right) check_family(r, *m.algebra, *m.right, false, "right");
  if (m.left && m.right) {
    std::string where;
    bool ok = families_commute(*m.left, *m.right, where);
    r.record("Bimodule/commute", ok, ok ? "" : "left/right " + where);
  }
  return r;
}

Report check_bimodule(const DoubleBimodule& m) {
  Report r;
  const ActionSelector all[4] = {ActionSelector::sigma_left, ActionSelector::sigma_right,
                                 ActionSelector::tau_left, ActionSelector::tau_right};
  const std::size_t count = m.plain() ? 2 : 4;
  const ActionSelector* sels = m.plain() ? all + 2 : all;
  for (std::size_t k = 0; k < count; ++k) {
    if (m.has(sels[k])) check_family(r, *m.algebra(), m.family(sels[k]), is_left(sels[k]), selector_name(sels[k]));
  }
  bool ok = true;
  for (std::size_t a = 0; a < count && ok; ++a)
    for (std::size_t b = a + 1; b < count && ok; ++b) {
      if (!m.has(sels[a]) || !m.has(sels[b])) continue;
      std::string where;
      if (!families_commute(m.family(sels[a]), m.family(sels[b]), where)) {
        ok = false;
        r.record("Bimodule/commute", false,
                 std::string(selector_name(sels[a])) + "/" + selector_name(sels[b]) + " " + where);
      }
    }
  if (ok) r.record("Bimodule/commute", true);
  return r;
}

bool intertwines(const DoubleBimodule& src, const DoubleBimodule& dst, const Mat& mat) {
  if (mat.rows() != dst.dim() || mat.cols() != src.dim()) return false;
  for (auto s : {ActionSelector::sigma_left, ActionSelector::sigma_right, ActionSelector::tau_left,
                 ActionSelector::tau_right}) {
    if (!src.has(s) || !dst.has(s)) continue;
    for (std::size_t i = 0; i < src.algebra()->dim(); ++i)
      if (!(mat * src.act_basis(s, i) == dst.act_basis(s, i) * mat)) return false;
  }
  return true;
}

bool intertwines(const Bimodule& src, const Bimodule& dst, const Mat& mat) {
  return intertwines(DoubleBimodule::from_bimodule(src), DoubleBimodule::from_bimodule(dst), mat);
}

Bimodule regular_bimodule(const AlgebraPtr& r) {
  Bimodule m{r, r->dim(), ActionFamily{}, ActionFamily{}};
  for (std::size_t i = 0; i < r->dim(); ++i) {
    m.left->push_back(r->left_mult_basis(i));
    m.right->push_back(r->right_mult_basis(i));
  }
  return m;
}

Bimodule twisted_bimodule(const AlgebraPtr& r, const Mat& alpha) {
  Bimodule m = regular_bimodule(r);
  for (std::size_t i = 0; i < r->dim(); ++i) (*m.right)[i] = r->right_mult(alpha.col(i));
  return m;
}

Bimodule idempotent_right_module(const AlgebraPtr& r, const Mat& e, bool central) {
  // basis of eR: independent columns of L_e
  Mat le = r->left_mult(e);
  auto [form, pivots] = rref(le);
  Mat basis = le.select_cols(pivots);
  Mat inv = left_inverse(basis);
  Bimodule m{r, pivots.size(), std::nullopt, ActionFamily{}};
  for (std::size_t i = 0; i < r->dim(); ++i) m.right->push_back(inv * r->right_mult_basis(i) * basis);
  if (central) {
    m.left = ActionFamily{};
    for (std::size_t i = 0; i < r->dim(); ++i) m.left->push_back(inv * r->left_mult_basis(i) * basis);
  }
  return m;
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw DimensionError("direct_sum of nothing");
  const AlgebraPtr& r = parts[0].algebra;
  std::size_t dim = 0;
  bool has_left = true, has_right = true;
  for (const auto& p : parts) {
    dim += p.dim;
    has_left = has_left && p.left.has_value();
    has_right = has_right && p.right.has_value();
  }
  Bimodule m{r, dim, std::nullopt, std::nullopt};
  auto build = [&](bool left) {
    ActionFamily f;
    for (std::size_t i = 0; i < r->dim(); ++i) {
      Mat op(r->field(), dim, dim);
      std::size_t off = 0;
      for (const auto& p : parts) {
        op.set_block(off, off, left ? (*p.left)[i] : (*p.right)[i]);
        off += p.dim;
      }
      f.push_back(op);
    }
    return f;
  };
  if (has_left) m.left = build(true);
  if (has_right) m.right = build(false);
  return m;
}

Bimodule change_basis(const Bimodule& m, const Mat& p) {
  Mat pinv = invert(p);
  Bimodule out = m;
  if (out.left)
    for (auto& op : *out.left) op = pinv * op * p;
  if (out.right)
    for (auto& op : *out.right) op = pinv * op * p;
  return out;
}

Bimodule free_bimodule(const AlgebraPtr& r, std::size_t rank_) {
  return direct_sum(std::vector<Bimodule>(rank_, regular_bimodule(r)));
}

}  // namespace hopfalg
