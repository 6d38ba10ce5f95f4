#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfalg/tensor.hpp"

namespace hopfalg {

enum class DualSide {
  left,   // M* = right-linear functionals on a right module
  right,  // *M = left-linear functionals on a left module
};

// Functionals are n x d matrices (column j = value on e_j). The chosen
// generators m_i of M are the standard basis vectors e_i.
struct DualData {
  DualSide side = DualSide::left;
  Bimodule base;
  Bimodule dual;
  std::vector<Mat> functionals;
  Mat coords_map;  // e x (n d), coordinates of a row-major flattened functional
  Mat dual_basis;  // e x d, column i = coordinates of the functional paired with e_i

  // left: M* (x)_k M -> R ; right: M (x)_k *M -> R
  Mat pairing;
  // left: M (x)_R M* ; right: *M (x)_R M
  TensorSpacePtr db_space;
  Mat db_element;  // db_space coordinates of sum_i m_i (x) phi^i (resp. xi^i (x) m_i)
  // left: M* (x)_R M ; right: M (x)_R *M. Present only for bimodules.
  TensorSpacePtr ev_space;
  std::optional<Mat> ev;  // n x ev_space dim
  std::optional<Mat> db;  // db_space dim x n

  std::size_t dual_dim() const { return functionals.size(); }
  Mat coords(const Mat& functional) const;
  Mat functional_of(const Mat& coords) const;
  // phi^i (resp. xi^i) as a functional.
  Mat paired_functional(std::size_t i) const { return functional_of(dual_basis.col(i)); }
};

// Throws NotProjective when no dual bases exist. A seed picks a random
// solution of the dual-basis system instead of the pivot solution.
DualData dual_module(const Bimodule& m, std::optional<std::uint64_t> seed = std::nullopt);
DualData right_dual_module(const Bimodule& m, std::optional<std::uint64_t> seed = std::nullopt);

Report check_dual(const DualData& d);

}  // namespace hopfalg
