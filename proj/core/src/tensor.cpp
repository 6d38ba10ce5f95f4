#include "hopfalg/tensor.hpp"

#include "hopfalg/errors.hpp"

namespace hopfalg {

std::size_t Space::flat_dim() const { return structure ? structure->flat_dim() : module.dim(); }

std::vector<std::size_t> Space::leaf_dims() const {
  if (structure) return structure->leaf_dims();
  return {module.dim()};
}

std::vector<DoubleBimodule> Space::leaves() const {
  if (structure) return structure->leaves();
  return {module};
}

Mat Space::flat_proj() const {
  return structure ? structure->flat_proj() : Mat::identity(module.field(), module.dim());
}

Mat Space::flat_sect() const {
  return structure ? structure->flat_sect() : Mat::identity(module.field(), module.dim());
}

Space leaf(const DoubleBimodule& m) { return Space{m, nullptr}; }
Space leaf(const Bimodule& m) { return Space{DoubleBimodule::from_bimodule(m), nullptr}; }

namespace {

// proj * (factor action on the two-factor ambient)
Mat proj_times_factor_op(const TensorSpace& t, int factor, const Mat& op) {
  const Field& f = op.field();
  const std::size_t da = t.factor(0).dim(), db = t.factor(1).dim();
  return factor == 0 ? right_mul_kron(t.proj(), op, Mat::identity(f, db))
                     : right_mul_kron(t.proj(), Mat::identity(f, da), op);
}

// On a plain factor sigma and tau name the same action, so a residual on the
// side already consumed by a relation is not an independent action.
bool aliases_relation(const std::vector<RelationPair>& pairs, int factor, ActionSelector source) {
  for (const auto& p : pairs) {
    ActionSelector used = factor == 0 ? p.on_left : p.on_right;
    if (is_left(used) == is_left(source)) return true;
  }
  return false;
}

}  // namespace

TensorSpacePtr TensorSpace::make(const Space& a, const Space& b, std::vector<RelationPair> pairs,
                                 std::vector<Residual> residuals, bool plain) {
  const auto& alg = a.module.algebra();
  if (alg.get() != b.module.algebra().get() && !(alg->field() == b.module.field() && alg->dim() == b.module.algebra()->dim())) {
    throw DimensionError("tensor factors over different algebras");
  }
  std::shared_ptr<TensorSpace> t(new TensorSpace());
  t->a_ = a;
  t->b_ = b;
  t->pairs_ = pairs;
  const Field& field = alg->field();
  const std::size_t da = a.dim(), db = b.dim(), n = alg->dim();
  const Mat ia = Mat::identity(field, da), ib = Mat::identity(field, db);

  std::vector<Mat> rows;
  for (const auto& p : pairs) {
    if (!a.module.has(p.on_left) || !b.module.has(p.on_right)) {
      throw InvalidSelector(std::string("tensor relation uses missing action ") + selector_name(p.on_left) +
                            "/" + selector_name(p.on_right));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Mat rel = kron(a.module.act_basis(p.on_left, i), ib) - kron(ia, b.module.act_basis(p.on_right, i));
      if (!rel.is_zero()) rows.push_back(rel.transpose());
    }
  }
  Mat relations = rows.empty() ? Mat(field, 0, da * db) : Mat::vstack(rows);
  t->q_ = hopfalg::quotient(field, da * db, relations);

  t->module_ = DoubleBimodule(alg, t->q_.dim());
  for (const auto& r : residuals) {
    const DoubleBimodule& src = r.factor == 0 ? a.module : b.module;
    if (!src.has(r.source)) continue;
    if (src.plain() && aliases_relation(pairs, r.factor, r.source)) continue;
    ActionFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
      Mat pa = proj_times_factor_op(*t, r.factor, src.act_basis(r.source, i));
      Mat induced = pa * t->q_.sect;
      if (!(pa == induced * t->q_.proj)) {
        throw IllDefined(std::string("residual action ") + selector_name(r.target) +
                         " does not preserve the tensor relations");
      }
      fam.push_back(induced);
    }
    t->module_.set(r.target, std::move(fam));
  }
  if (plain) t->module_.mark_plain();

  if (!a.structure && !b.structure) {
    t->flat_proj_ = t->q_.proj;
    t->flat_sect_ = t->q_.sect;
  } else {
    t->flat_proj_ = right_mul_kron(t->q_.proj, a.flat_proj(), b.flat_proj());
    t->flat_sect_ = apply_kron(a.flat_sect(), b.flat_sect(), t->q_.sect);
  }
  return t;
}

Space TensorSpace::as_space() const { return Space{module_, shared_from_this()}; }

std::vector<std::size_t> TensorSpace::leaf_dims() const {
  auto l = a_.leaf_dims();
  auto r = b_.leaf_dims();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::vector<DoubleBimodule> TensorSpace::leaves() const {
  auto l = a_.leaves();
  auto r = b_.leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

Mat TensorSpace::slot_action(std::size_t leaf_index, ActionSelector sel, const Mat& a) const {
  auto lv = leaves();
  auto dims = leaf_dims();
  if (leaf_index >= lv.size()) throw DimensionError("slot index out of range");
  Mat op = lv[leaf_index].act(sel, a);
  Mat projected = apply_slot(dims, leaf_index, op.transpose(), flat_proj_.transpose()).transpose();
  Mat induced = projected * flat_sect_;
  if (!(projected == induced * flat_proj_)) {
    throw IllDefined(std::string("slot action ") + selector_name(sel) + " on leaf " +
                     std::to_string(leaf_index) + " does not descend");
  }
  return induced;
}

Mat TensorSpace::descend(const Mat& flat_op) const {
  Mat projected = flat_proj_ * flat_op;
  Mat induced = projected * flat_sect_;
  if (!(projected == induced * flat_proj_)) throw IllDefined("operator does not descend to the quotient");
  return induced;
}

TensorSpacePtr tau_sigma(const Space& a, const Space& b) {
  using S = ActionSelector;
  return TensorSpace::make(a, b, {{S::tau_right, S::sigma_left}},
                           {{S::sigma_left, 0, S::sigma_left},
                            {S::sigma_right, 0, S::sigma_right},
                            {S::tau_left, 1, S::tau_left},
                            {S::tau_right, 1, S::tau_right}});
}

namespace {
std::vector<Residual> box_residuals() {
  using S = ActionSelector;
  return {{S::sigma_left, 1, S::sigma_left},
          {S::sigma_right, 0, S::sigma_right},
          {S::tau_left, 0, S::tau_left},
          {S::tau_right, 1, S::tau_right}};
}
}  // namespace

TensorSpacePtr boxtimes(const Space& a, const Space& b) {
  using S = ActionSelector;
  return TensorSpace::make(a, b, {{S::sigma_left, S::sigma_right}, {S::tau_right, S::tau_left}},
                           box_residuals());
}

TensorSpacePtr sigma_sigma(const Space& a, const Space& b) {
  using S = ActionSelector;
  return TensorSpace::make(a, b, {{S::sigma_left, S::sigma_right}}, box_residuals());
}

TensorSpacePtr tau_tau(const Space& a, const Space& b) {
  using S = ActionSelector;
  return TensorSpace::make(a, b, {{S::tau_right, S::tau_left}},
                           {{S::tau_left, 0, S::tau_left}, {S::tau_right, 1, S::tau_right}});
}

TensorSpacePtr bimodule_tensor(const Space& a, const Space& b) {
  using S = ActionSelector;
  return TensorSpace::make(a, b, {{S::tau_right, S::tau_left}},
                           {{S::tau_left, 0, S::tau_left}, {S::tau_right, 1, S::tau_right}}, true);
}

TensorSpacePtr tensor_over_r(const Space& a, ActionSelector sel_a, const Space& b, ActionSelector sel_b) {
  using S = ActionSelector;
  if (!a.module.has(sel_a) || !b.module.has(sel_b)) {
    throw InvalidSelector("tensor_over_r: selector names a missing action");
  }
  if (sel_a == S::tau_right && sel_b == S::sigma_left) return tau_sigma(a, b);
  if (sel_a == S::sigma_left && sel_b == S::sigma_right) return sigma_sigma(a, b);
  if (sel_a == S::tau_right && sel_b == S::tau_left) {
    if (a.module.plain() && b.module.plain()) return bimodule_tensor(a, b);
    return tau_tau(a, b);
  }
  return TensorSpace::make(a, b, {{sel_a, sel_b}}, {});
}

Mat absorb_left(const ActionFamily& act, const Mat& f, std::size_t dim_second) {
  const Field& field = f.field();
  Mat out(field, dim_second, f.cols() * dim_second);
  const Mat id = Mat::identity(field, dim_second);
  for (std::size_t l = 0; l < f.rows(); ++l) {
    Mat row = f.row(l);
    if (row.is_zero()) continue;
    out = out + act[l] * kron(row, id);
  }
  return out;
}

Mat absorb_right(const ActionFamily& act, const Mat& f, std::size_t dim_first) {
  const Field& field = f.field();
  Mat out(field, dim_first, dim_first * f.cols());
  const Mat id = Mat::identity(field, dim_first);
  for (std::size_t l = 0; l < f.rows(); ++l) {
    Mat row = f.row(l);
    if (row.is_zero()) continue;
    out = out + act[l] * kron(id, row);
  }
  return out;
}

Mat swap_factors(const Field& field, std::size_t d1, std::size_t d2) {
  return permute_factors(field, {d1, d2}, {1, 0});
}

}  // namespace hopfalg
