#include "hopfalg/bialgebroid.hpp"

#include <string>

#include "hopfalg/errors.hpp"

namespace hopfalg {

namespace {

using S = ActionSelector;

std::string pair_label(std::size_t a, std::size_t b) {
  return "a=e" + std::to_string(a) + ", b=e" + std::to_string(b) + ", h";
}

}  // namespace

Bialgebroid Bialgebroid::make(CoalgebroidPtr base, const Mat& product_flat, Mat unit) {
  Bialgebroid h;
  h.box = boxtimes(leaf(base->carrier), leaf(base->carrier));
  h.base = std::move(base);
  h.product = product_flat * h.box->sect();
  if (!(h.product * h.box->proj() == product_flat)) throw IllDefined("product does not descend to H boxtimes H");
  h.unit = std::move(unit);
  return h;
}

Mat Bialgebroid::one() const {
  const Algebra& r = *algebra();
  return unit * kron(r.unit(), r.unit());
}

Mat Bialgebroid::source(const Mat& a) const { return unit * kron(a, algebra()->unit()); }

Mat Bialgebroid::target(const Mat& a) const { return unit * kron(algebra()->unit(), a); }

Report check_bialgebroid(const Bialgebroid& h) {
  Report rep;
  const Coalgebroid& c = *h.base;
  const Algebra& r = *h.algebra();
  const Field& field = h.field();
  const std::size_t n = r.dim(), d = h.dim();
  const DoubleBimodule& l = c.carrier;
  const TensorSpace& cot = *c.cotensor;
  const Mat id = Mat::identity(field, d);
  const Mat m = h.product_flat();
  const Mat dflat = c.coproduct_flat();
  const Mat one = h.one();

  {
    const Mat x = h.box->sect();
    Mat legs = permute_slots({d, d, d, d}, {0, 2, 1, 3}, apply_kron(dflat, dflat, x));
    rep.compare("Eq.24", c.coproduct * h.product, cot.proj() * apply_kron(m, m, legs), "coproduct, h[x]k");
    Mat eps_bar = c.counit * absorb_left(l.family(S::sigma_right), c.counit, d);
    rep.compare("Eq.24", c.counit * h.product, eps_bar * x, "counit, h[x]k");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat lhs = c.coproduct * h.unit.col(a * n + b);
      Mat rhs = cot.proj() * kron(h.source(r.basis(a)), h.target(r.basis(b)));
      rep.compare("Eq.25", lhs, rhs, "a=e" + std::to_string(a) + ", b=e" + std::to_string(b) + ", col");
    }
  rep.compare("Eq.25", c.counit * h.unit, r.mul_matrix(), "counit, a(x)b");

  rep.compare("Eq.26", right_mul_kron(m, m, id), right_mul_kron(m, id, m), "h(x)k(x)l");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat u = h.unit.col(a * n + b);
      rep.compare("Eq.27", right_mul_kron(m, id, u), l.act_basis(S::sigma_left, a) * l.act_basis(S::tau_right, b),
                  "h o u(a(x)b), " + pair_label(a, b));
      rep.compare("Eq.27", right_mul_kron(m, u, id), l.act_basis(S::tau_left, b) * l.act_basis(S::sigma_right, a),
                  "u(a(x)b) o h, " + pair_label(a, b));
    }

  rep.compare("Eq.29", c.coproduct * one, cot.proj() * kron(one, one), "Delta(1)");
  for (std::size_t a = 0; a < n; ++a) {
    rep.compare("Eq.29", right_mul_kron(m, l.act_basis(S::sigma_left, a), id),
                right_mul_kron(m, id, l.act_basis(S::sigma_right, a)), "sigma, a=e" + std::to_string(a) + ", h(x)k");
    rep.compare("Eq.29", right_mul_kron(m, l.act_basis(S::tau_right, a), id),
                right_mul_kron(m, id, l.act_basis(S::tau_left, a)), "tau, a=e" + std::to_string(a) + ", h(x)k");
  }

  for (std::size_t a = 0; a < n; ++a) {
    const std::string lbl = "a=e" + std::to_string(a) + ", h(x)k";
    rep.compare("Eq.30", l.act_basis(S::sigma_left, a) * m, right_mul_kron(m, id, l.act_basis(S::sigma_left, a)),
                "sigma left, " + lbl);
    rep.compare("Eq.30", l.act_basis(S::tau_left, a) * m, right_mul_kron(m, l.act_basis(S::tau_left, a), id),
                "tau left, " + lbl);
    rep.compare("Eq.30", l.act_basis(S::tau_right, a) * m, right_mul_kron(m, id, l.act_basis(S::tau_right, a)),
                "tau right, " + lbl);
    rep.compare("Eq.30", l.act_basis(S::sigma_right, a) * m, right_mul_kron(m, l.act_basis(S::sigma_right, a), id),
                "sigma right, " + lbl);
  }

  for (std::size_t a = 0; a < n; ++a) {
    const Mat ea = r.basis(a);
    const Mat s = h.source(ea), t = h.target(ea);
    const std::string lbl = "a=e" + std::to_string(a) + ", h";
    rep.compare("Eq.31", right_mul_kron(m, s, id), l.act(S::sigma_right, ea), "s(a) o h, " + lbl);
    rep.compare("Eq.31", right_mul_kron(m, id, s), l.act(S::sigma_left, ea), "h o s(a), " + lbl);
    rep.compare("Eq.31", right_mul_kron(m, id, t), l.act(S::tau_right, ea), "h o t(a), " + lbl);
    rep.compare("Eq.31", right_mul_kron(m, t, id), l.act(S::tau_left, ea), "t(a) o h, " + lbl);
    rep.compare("Eq.31", s, l.act(S::sigma_left, ea) * one, "s(a) = sigma(a)1, " + lbl);
    rep.compare("Eq.31", s, l.act(S::sigma_right, ea) * one, "s(a) = 1 sigma(a), " + lbl);
    rep.compare("Eq.31", t, l.act(S::tau_left, ea) * one, "t(a) = tau(a)1, " + lbl);
    rep.compare("Eq.31", t, l.act(S::tau_right, ea) * one, "t(a) = 1 tau(a), " + lbl);
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Mat ea = r.basis(a), eb = r.basis(b), ab = r.mul(ea, eb);
      rep.compare("Bialg/s-antihom", m * kron(h.source(eb), h.source(ea)), h.source(ab), pair_label(a, b));
      rep.compare("Bialg/t-hom", m * kron(h.target(ea), h.target(eb)), h.target(ab), pair_label(a, b));
    }
  rep.compare("Bialg/s-antihom", h.source(r.unit()), one, "s(1)");
  rep.compare("Bialg/t-hom", h.target(r.unit()), one, "t(1)");

  Coalgebroid unit_c = unit_coalgebroid(h.algebra());
  bool lin = intertwines(unit_c.carrier, l, h.unit);
  rep.record("Bialg/unit-coalg", lin, "u does not intertwine the actions of R (x)_k R");
  if (lin) rep.record("Bialg/unit-coalg", is_coalgebroid_morphism(unit_c, c, h.unit), "u is not a coalgebroid map");
  return rep;
}

RightComodule comodule_tensor(const BialgebroidPtr& h, const RightComodule& m, const RightComodule& nm) {
  const Field& field = h->field();
  const std::size_t dm = m.dim(), dn = nm.dim(), d = h->dim();
  auto p = bimodule_tensor(leaf(m.carrier), leaf(nm.carrier));
  Bimodule carrier{h->algebra(), p->dim(), p->module().family(S::tau_left), p->module().family(S::tau_right)};

  Mat legs = apply_kron(m.coaction_flat(), nm.coaction_flat(), Mat::identity(field, dm * dn));
  legs = permute_slots({dm, d, dn, d}, {0, 2, 1, 3}, legs);
  Mat phi = apply_kron(p->proj(), h->product_flat(), legs);

  auto space = tau_sigma(leaf(carrier), leaf(h->base->carrier));
  Mat projected = space->proj() * phi;
  Mat coaction = projected * p->sect();
  if (!(projected == coaction * p->proj())) throw IllDefined("tensor coaction does not descend to M (x)_R N");
  return RightComodule::make(carrier, h->base, phi * p->sect());
}

RightComodule unit_comodule(const BialgebroidPtr& h) {
  const AlgebraPtr& r = h->algebra();
  const std::size_t n = r->dim(), d = h->dim();
  Mat flat(r->field(), n * d, n);
  for (std::size_t a = 0; a < n; ++a) flat.set_block(0, a, kron(r->unit(), h->target(r->basis(a))));
  return RightComodule::make(regular_bimodule(r), h->base, flat);
}

BialgebroidPtr classical_bialgebra(const Field& field, std::size_t dim, const Mat& product, const Mat& unit,
                                   const Mat& coproduct, const Mat& counit) {
  AlgebraPtr k = algebra_ground(field);
  DoubleBimodule carrier(k, dim);
  ActionFamily scalar{Mat::identity(field, dim)};
  for (auto sel : {S::sigma_left, S::sigma_right, S::tau_left, S::tau_right}) carrier.set(sel, scalar);
  auto base = std::make_shared<const Coalgebroid>(Coalgebroid::make(carrier, coproduct, counit));
  return std::make_shared<const Bialgebroid>(Bialgebroid::make(base, product, unit));
}

BialgebroidPtr unit_bialgebroid(const AlgebraPtr& r) {
  const std::size_t n = r->dim(), n2 = n * n;
  auto base = std::make_shared<const Coalgebroid>(unit_coalgebroid(r));
  Mat prod(r->field(), n2, n2 * n2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          prod.set_block(0, (a * n + b) * n2 + c * n + e, kron(r->product(c, a), r->product(b, e)));
  return std::make_shared<const Bialgebroid>(Bialgebroid::make(base, prod, Mat::identity(r->field(), n2)));
}

}  // namespace hopfalg
