#pragma once

#include "hopfalg/coalgebroid.hpp"

namespace hopfalg {

// delta : M -> M tau(x)sigma L. The carrier's right action is tau; its left
// action is the one induced by the coaction.
struct RightComodule {
  Bimodule carrier;
  CoalgebroidPtr over;
  TensorSpacePtr space;  // M tau(x)sigma L
  Mat coaction;          // space dim x dim M

  // Installs the induced left action when the carrier has none.
  static RightComodule make(Bimodule carrier, CoalgebroidPtr over, const Mat& coaction_flat);

  std::size_t dim() const { return carrier.dim; }
  Mat coaction_flat() const { return space->flat_sect() * coaction; }
};

// delta : M -> L tau(x)sigma M. The carrier's left action is sigma; its
// right action is the one induced by the coaction.
struct LeftComodule {
  Bimodule carrier;
  CoalgebroidPtr over;
  TensorSpacePtr space;  // L tau(x)sigma M
  Mat coaction;

  static LeftComodule make(Bimodule carrier, CoalgebroidPtr over, const Mat& coaction_flat);

  std::size_t dim() const { return carrier.dim; }
  Mat coaction_flat() const { return space->flat_sect() * coaction; }
};

// tau(a) m = sum m_(0) tau epsilon(tau(a) m_(1)), as n operators on M.
ActionFamily induced_left_action(const Coalgebroid& over, std::size_t dim, const ActionFamily& right,
                                 const Mat& coaction_flat);
// phi sigma(a) = sum sigma epsilon(phi_(-1) sigma(a)) phi_(0).
ActionFamily induced_right_action(const Coalgebroid& over, std::size_t dim, const ActionFamily& left,
                                  const Mat& coaction_flat);

Report check_right_comodule(const RightComodule& m);
Report check_left_comodule(const LeftComodule& m);

// delta(phi) = sum_i sigma phi(m_i(0)) m_i(1) (x) phi^i on M*.
LeftComodule dual_left_comodule(const RightComodule& m, const DualData& d);
// Converse direction: a left comodule N and its right dual *N give the
// right coaction delta(eta) = sum_j xi^j (x) n_j(-1) tau(eta(n_j(0))).
RightComodule right_dual_of_left(const LeftComodule& n, const DualData& rd);

// Checks the defining condition of the dual coaction and the round trip back to M.
Report check_dual_left_comodule(const RightComodule& m, const DualData& d, const LeftComodule& dual);

// Is f (dst x src) a morphism of right comodules?
bool is_comodule_morphism(const RightComodule& src, const RightComodule& dst, const Mat& f);

// R over R (x)_k R with delta(a) = 1 (x) (1 (x) a).
RightComodule unit_coalgebroid_comodule(const CoalgebroidPtr& unit);
// M over M* (x)_k M with delta(m) = sum_i m_i (x) (phi^i (x) m).
RightComodule endo_comodule(const CoalgebroidPtr& endo, const DualData& d);

}  // namespace hopfalg
