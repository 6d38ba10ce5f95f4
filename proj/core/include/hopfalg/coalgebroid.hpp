#pragma once

#include <memory>
#include <vector>

#include "hopfalg/dual.hpp"
#include "hopfalg/tensor.hpp"

namespace hopfalg {

// (L, Delta, epsilon). The coproduct is stored in coordinates of the
// quotient L tau(x)sigma L, whose factors are the carrier itself.
struct Coalgebroid {
  DoubleBimodule carrier;
  TensorSpacePtr cotensor;
  Mat coproduct;  // cotensor dim x dim L
  Mat counit;     // dim R x dim L
  Mat representative;  // the flat coproduct passed to make, if any

  // coproduct_flat: columns in L (x)_k L coordinates.
  static Coalgebroid make(DoubleBimodule carrier, const Mat& coproduct_flat, Mat counit);

  std::size_t dim() const { return carrier.dim(); }
  const AlgebraPtr& algebra() const { return carrier.algebra(); }
  const Field& field() const { return carrier.field(); }
  Mat coproduct_flat() const { return cotensor->flat_sect() * coproduct; }
};

using CoalgebroidPtr = std::shared_ptr<const Coalgebroid>;

Report check_coalgebroid(const Coalgebroid& c);

// eta(h) as the n x n matrix of c -> epsilon(tau(c) h), one per basis h.
std::vector<Mat> anchor(const Coalgebroid& c);
// eta(v) for a coefficient column v.
Mat anchor_of(const Coalgebroid& c, const Mat& v);

// M* (x)_k M with Delta = id (x) db_k (x) id and epsilon = ev_k.
Coalgebroid endo_coalgebroid(const DualData& d);
// R (x)_k R with s(a)t(b)(m (x) n)s(c)t(d) = amc (x) bnd.
Coalgebroid unit_coalgebroid(const AlgebraPtr& r);

struct BoxCoalgebroid {
  Coalgebroid coalgebroid;
  TensorSpacePtr box;  // L boxtimes K over the two input carriers
};

// Throws IllDefined when Delta-bar or epsilon-bar does not descend.
BoxCoalgebroid boxtimes_coalgebroid(const Coalgebroid& l, const Coalgebroid& k);

// Does f (dst x src) commute with the actions, coproducts and counits?
bool is_coalgebroid_morphism(const Coalgebroid& src, const Coalgebroid& dst, const Mat& f);

// L boxtimes (R (x)_k R) -> L, h [x] (a (x) b) -> s(a) h t(b), in quotient coordinates.
Mat right_unit_identification(const Coalgebroid& l, const BoxCoalgebroid& box);
// (R (x)_k R) boxtimes L -> L, (a (x) b) [x] h -> t(b) h s(a).
Mat left_unit_identification(const Coalgebroid& l, const BoxCoalgebroid& box);

}  // namespace hopfalg
