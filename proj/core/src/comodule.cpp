#include "hopfalg/comodule.hpp"

#include <string>

#include "hopfalg/errors.hpp"

namespace hopfalg {

namespace {

std::string scalar_label(std::size_t i) { return "a=e" + std::to_string(i) + ", m"; }

}  // namespace

ActionFamily induced_left_action(const Coalgebroid& over, std::size_t dim, const ActionFamily& right,
                                 const Mat& coaction_flat) {
  ActionFamily out;
  const std::size_t n = over.algebra()->dim();
  for (std::size_t i = 0; i < n; ++i) {
    Mat f = over.counit * over.carrier.act_basis(ActionSelector::tau_left, i);
    out.push_back(absorb_right(right, f, dim) * coaction_flat);
  }
  return out;
}

ActionFamily induced_right_action(const Coalgebroid& over, std::size_t dim, const ActionFamily& left,
                                  const Mat& coaction_flat) {
  ActionFamily out;
  const std::size_t n = over.algebra()->dim();
  for (std::size_t i = 0; i < n; ++i) {
    Mat f = over.counit * over.carrier.act_basis(ActionSelector::sigma_right, i);
    out.push_back(absorb_left(left, f, dim) * coaction_flat);
  }
  return out;
}

RightComodule RightComodule::make(Bimodule carrier, CoalgebroidPtr over, const Mat& coaction_flat) {
  if (!carrier.right) throw InvalidSelector("right comodule carrier needs a right action");
  if (!carrier.left) carrier.left = induced_left_action(*over, carrier.dim, *carrier.right, coaction_flat);
  RightComodule m;
  m.carrier = std::move(carrier);
  m.over = std::move(over);
  m.space = tau_sigma(leaf(m.carrier), leaf(m.over->carrier));
  m.coaction = m.space->proj() * coaction_flat;
  return m;
}

LeftComodule LeftComodule::make(Bimodule carrier, CoalgebroidPtr over, const Mat& coaction_flat) {
  if (!carrier.left) throw InvalidSelector("left comodule carrier needs a left action");
  if (!carrier.right) carrier.right = induced_right_action(*over, carrier.dim, *carrier.left, coaction_flat);
  LeftComodule m;
  m.carrier = std::move(carrier);
  m.over = std::move(over);
  m.space = tau_sigma(leaf(m.over->carrier), leaf(m.carrier));
  m.coaction = m.space->proj() * coaction_flat;
  return m;
}

Report check_right_comodule(const RightComodule& m) {
  Report rep;
  const Coalgebroid& l = *m.over;
  const Algebra& r = *l.algebra();
  const Field& field = l.field();
  const std::size_t n = r.dim(), dm = m.dim(), dl = l.dim();
  const TensorSpace& sp = *m.space;
  const Mat flat = m.coaction_flat();

  for (std::size_t i = 0; i < n; ++i) {
    rep.compare("Comod/linear", m.coaction * (*m.carrier.right)[i],
                sp.module().act_basis(ActionSelector::tau_right, i) * m.coaction, scalar_label(i));
  }

  auto t3 = tau_sigma(sp.as_space(), leaf(l.carrier));
  rep.compare("Comod/coassoc", t3->flat_proj() * apply_kron(flat, Mat::identity(field, dl), flat),
              t3->flat_proj() * apply_kron(Mat::identity(field, dm), l.coproduct_flat(), flat), "m");

  rep.compare("Comod/counit", absorb_right(*m.carrier.right, l.counit, dm) * flat, Mat::identity(field, dm), "m");

  ActionFamily induced = induced_left_action(l, dm, *m.carrier.right, flat);
  for (std::size_t i = 0; i < n; ++i) rep.compare("Eq.18", induced[i], (*m.carrier.left)[i], scalar_label(i));

  Bimodule with_induced = m.carrier;
  with_induced.left = induced;
  Report bim = check_bimodule(with_induced);
  rep.record("Lemma1.3.2", bim.ok(), bim.ok() ? "" : "induced left action: " + bim.failed_tags().front());
  for (std::size_t i = 0; i < n; ++i) {
    const Mat a = r.basis(i);
    rep.compare("Lemma1.3.2", sp.slot_action(1, ActionSelector::tau_left, a) * m.coaction,
                m.coaction * induced[i], scalar_label(i));
    rep.compare("Eq.19", sp.slot_action(0, ActionSelector::tau_left, a) * m.coaction,
                sp.slot_action(1, ActionSelector::sigma_right, a) * m.coaction, scalar_label(i));
  }
  return rep;
}

Report check_left_comodule(const LeftComodule& m) {
  Report rep;
  const Coalgebroid& l = *m.over;
  const Algebra& r = *l.algebra();
  const Field& field = l.field();
  const std::size_t n = r.dim(), dm = m.dim(), dl = l.dim();
  const TensorSpace& sp = *m.space;
  const Mat flat = m.coaction_flat();

  for (std::size_t i = 0; i < n; ++i) {
    rep.compare("LComod/linear", m.coaction * (*m.carrier.left)[i],
                sp.module().act_basis(ActionSelector::sigma_left, i) * m.coaction, scalar_label(i));
  }

  auto t3 = tau_sigma(leaf(l.carrier), sp.as_space());
  rep.compare("LComod/coassoc", t3->flat_proj() * apply_kron(l.coproduct_flat(), Mat::identity(field, dm), flat),
              t3->flat_proj() * apply_kron(Mat::identity(field, dl), flat, flat), "m");

  rep.compare("LComod/counit", absorb_left(*m.carrier.left, l.counit, dm) * flat, Mat::identity(field, dm), "m");

  ActionFamily induced = induced_right_action(l, dm, *m.carrier.left, flat);
  for (std::size_t i = 0; i < n; ++i) rep.compare("Eq.17.2", induced[i], (*m.carrier.right)[i], scalar_label(i));
  for (std::size_t i = 0; i < n; ++i) {
    const Mat a = r.basis(i);
    rep.compare("Eq.17.3", sp.slot_action(0, ActionSelector::tau_left, a) * m.coaction,
                sp.slot_action(1, ActionSelector::sigma_right, a) * m.coaction, scalar_label(i));
  }
  return rep;
}

LeftComodule dual_left_comodule(const RightComodule& m, const DualData& d) {
  if (d.side != DualSide::left) throw InvalidSelector("dual_left_comodule needs a left dual");
  const Coalgebroid& l = *m.over;
  const Field& field = l.field();
  const std::size_t dl = l.dim(), e = d.dual_dim(), dm = m.dim();
  const Mat flat = m.coaction_flat();
  const ActionFamily& sigma = l.carrier.family(ActionSelector::sigma_left);

  Mat out(field, dl * e, e);
  for (std::size_t t = 0; t < e; ++t) {
    Mat absorb = absorb_left(sigma, d.functionals[t], dl);
    Mat col(field, dl * e, 1);
    for (std::size_t i = 0; i < dm; ++i) col = col + kron(absorb * flat.col(i), d.dual_basis.col(i));
    out.set_block(0, t, col);
  }
  return LeftComodule::make(d.dual, m.over, out);
}

RightComodule right_dual_of_left(const LeftComodule& nc, const DualData& rd) {
  if (rd.side != DualSide::right) throw InvalidSelector("right_dual_of_left needs a right dual");
  const Coalgebroid& l = *nc.over;
  const Field& field = l.field();
  const std::size_t dl = l.dim(), e = rd.dual_dim(), dn = nc.dim();
  const Mat flat = nc.coaction_flat();
  const ActionFamily& tau = l.carrier.family(ActionSelector::tau_right);

  Mat out(field, e * dl, e);
  for (std::size_t t = 0; t < e; ++t) {
    Mat absorb = absorb_right(tau, rd.functionals[t], dl);
    Mat col(field, e * dl, 1);
    for (std::size_t j = 0; j < dn; ++j) col = col + kron(rd.dual_basis.col(j), absorb * flat.col(j));
    out.set_block(0, t, col);
  }
  return RightComodule::make(rd.dual, nc.over, out);
}

Report check_dual_left_comodule(const RightComodule& m, const DualData& d, const LeftComodule& dual) {
  Report rep;
  const Coalgebroid& l = *m.over;
  const Algebra& r = *l.algebra();
  const std::size_t n = r.dim(), dl = l.dim(), e = d.dual_dim(), dm = m.dim();
  const Mat mflat = m.coaction_flat();
  const Mat dflat = dual.coaction_flat();
  const ActionFamily& sigma = l.carrier.family(ActionSelector::sigma_left);
  const ActionFamily& tau = l.carrier.family(ActionSelector::tau_right);

  for (std::size_t x = 0; x < dm; ++x) {
    Mat values(l.field(), n, e);  // column s = phi_s(e_x)
    for (std::size_t s = 0; s < e; ++s) values.set_block(0, s, d.functionals[s].col(x));
    Mat lhs = absorb_right(tau, values, dl) * dflat;
    Mat rhs(l.field(), dl, e);
    for (std::size_t t = 0; t < e; ++t) rhs.set_block(0, t, absorb_left(sigma, d.functionals[t], dl) * mflat.col(x));
    rep.compare("Lemma1.3.3", lhs, rhs, "m=e" + std::to_string(x) + ", phi");
  }

  try {
    DualData rd = right_dual_module(dual.carrier);
    RightComodule back = right_dual_of_left(dual, rd);
    Mat canon(l.field(), rd.dual_dim(), dm);
    for (std::size_t x = 0; x < dm; ++x) {
      Mat fn(l.field(), n, e);
      for (std::size_t s = 0; s < e; ++s) fn.set_block(0, s, d.functionals[s].col(x));
      canon.set_block(0, x, rd.coords(fn));
    }
    bool iso = canon.rows() == canon.cols() && rank(canon) == dm;
    bool morphism = iso && is_comodule_morphism(m, back, canon);
    rep.record("Lemma1.3.3/roundtrip", morphism,
               iso ? "canonical map M -> *(M*) does not intertwine the coactions"
                   : "canonical map M -> *(M*) is not invertible");
  } catch (const NotProjective& ex) {
    rep.record("Lemma1.3.3/roundtrip", false, ex.what());
  }
  return rep;
}

bool is_comodule_morphism(const RightComodule& src, const RightComodule& dst, const Mat& f) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
  const std::size_t n = src.over->algebra()->dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!(f * (*src.carrier.right)[i] == (*dst.carrier.right)[i] * f)) return false;
  Mat lhs = dst.coaction * f;
  Mat rhs = dst.space->proj() * apply_kron(f, Mat::identity(f.field(), dst.over->dim()), src.coaction_flat());
  return lhs == rhs;
}

RightComodule unit_coalgebroid_comodule(const CoalgebroidPtr& unit) {
  const AlgebraPtr& r = unit->algebra();
  const std::size_t n = r->dim();
  Mat flat(r->field(), n * n * n, n);
  for (std::size_t a = 0; a < n; ++a) flat.set_block(0, a, kron(r->unit(), kron(r->unit(), r->basis(a))));
  return RightComodule::make(regular_bimodule(r), unit, flat);
}

RightComodule endo_comodule(const CoalgebroidPtr& endo, const DualData& d) {
  const Field& field = endo->field();
  const std::size_t dm = d.base.dim, dl = endo->dim();
  Mat flat(field, dm * dl, dm);
  for (std::size_t x = 0; x < dm; ++x) {
    Mat col(field, dm * dl, 1);
    for (std::size_t i = 0; i < dm; ++i)
      col = col + kron(Mat::unit_vector(field, dm, i), kron(d.dual_basis.col(i), Mat::unit_vector(field, dm, x)));
    flat.set_block(0, x, col);
  }
  return RightComodule::make(d.base, endo, flat);
}

}  // namespace hopfalg
