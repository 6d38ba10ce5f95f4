#pragma once

#include "hopfalg/bialgebroid.hpp"

namespace hopfalg {

// nabla : H -> H ^sigma(x)_sigma H, h -> h^- (x) h^+.
struct Antipode {
  BialgebroidPtr over;
  TensorSpacePtr space;  // H ^sigma(x)_sigma H
  Mat nabla;             // space dim x dim H

  Mat nabla_flat() const { return space->flat_sect() * nabla; }
};

// nabla_op : H -> H tau(x)tau H, h -> h_- (x) h_+.
struct OppositeAntipode {
  BialgebroidPtr over;
  TensorSpacePtr space;  // H tau(x)tau H
  Mat nabla;

  Mat nabla_flat() const { return space->flat_sect() * nabla; }
};

// H ^sigma(x)_sigma H and H tau(x)tau H with the slot actions the checks use.
TensorSpacePtr antipode_space(const Bialgebroid& h);
TensorSpacePtr opposite_antipode_space(const Bialgebroid& h);

// beta(h (x) k) = h o k_(1) (x) k_(2), from H ^sigma(x)_sigma H to H tau(x)sigma H.
Mat beta_map(const Bialgebroid& h, const TensorSpace& source);
// gamma(h (x) k) = k_(1) (x) h o k_(2), from H tau(x)tau H to H tau(x)sigma H.
Mat gamma_map(const Bialgebroid& h, const TensorSpace& source);

// Throws NoAntipode when beta is singular or the axioms fail.
Antipode compute_antipode(const BialgebroidPtr& h);
// The two cancellation axioms for a candidate nabla.
Report check_antipode_axioms(const Antipode& a);
// The inverse formula for beta and the derived identities of nabla.
Report check_antipode_identities(const Antipode& a);

// Throws NoOppositeAntipode when gamma is singular or the axioms fail.
OppositeAntipode compute_opposite_antipode(const BialgebroidPtr& h);
Report check_opposite_antipode(const OppositeAntipode& o);

// Right coaction on M* built from the antipode and the induced left coaction on M*.
RightComodule dual_right_comodule(const Antipode& a, const RightComodule& m, const DualData& d);
// Comodule axioms on M*, and ev, db as comodule maps.
Report check_dual_right_comodule(const Antipode& a, const RightComodule& m, const DualData& d,
                                const RightComodule& dual);

// m -> m_(1)- (x) m_(0) tau epsilon(m_(1)+).
LeftComodule left_coaction_from_right(const OppositeAntipode& o, const RightComodule& m);
// Right coaction on *M built from the left coaction above.
RightComodule right_dual_comodule(const OppositeAntipode& o, const RightComodule& m, const DualData& rd);
// Induced right action on the left coaction, and ev, db of the right duality as comodule maps.
Report check_right_dual_comodule(const OppositeAntipode& o, const RightComodule& m, const DualData& rd,
                                 const RightComodule& dual);
}  // namespace hopfalg
