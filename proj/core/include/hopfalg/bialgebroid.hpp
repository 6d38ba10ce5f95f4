#pragma once

#include <cstdint>
#include <vector>

#include "hopfalg/comodule.hpp"

namespace hopfalg {

// Coalgebroid H with product m : H boxtimes H -> H and unit u : R (x)_k R -> H.
struct Bialgebroid {
  CoalgebroidPtr base;
  TensorSpacePtr box;  // H boxtimes H
  Mat product;         // dim H x box dim
  Mat unit;            // dim H x n^2

  // product_flat: dim H x (dim H)^2, defined on representatives.
  static Bialgebroid make(CoalgebroidPtr base, const Mat& product_flat, Mat unit);

  std::size_t dim() const { return base->dim(); }
  const AlgebraPtr& algebra() const { return base->algebra(); }
  const Field& field() const { return base->field(); }
  Mat product_flat() const { return product * box->proj(); }
  Mat one() const;
  Mat source(const Mat& a) const;  // s(a) = u(a (x) 1)
  Mat target(const Mat& a) const;  // t(a) = u(1 (x) a)
};

using BialgebroidPtr = std::shared_ptr<const Bialgebroid>;

Report check_bialgebroid(const Bialgebroid& h);

// delta(m (x) n) = m_(0) (x) n_(0) (x) m_(1) o n_(1) on M (x)_R N.
RightComodule comodule_tensor(const BialgebroidPtr& h, const RightComodule& m, const RightComodule& n);
// R with delta(a) = 1 (x) t(a).
RightComodule unit_comodule(const BialgebroidPtr& h);

// A bialgebra over R = k. product: d x d^2, unit: d x 1, coproduct: d^2 x d,
// counit: 1 x d.
BialgebroidPtr classical_bialgebra(const Field& field, std::size_t dim, const Mat& product, const Mat& unit,
                                   const Mat& coproduct, const Mat& counit);

// R (x)_k R with (m (x) n)(c (x) d) = cm (x) nd and u = id.
BialgebroidPtr unit_bialgebroid(const AlgebraPtr& r);

}  // namespace hopfalg
