#pragma once

#include <memory>
#include <vector>

#include "hopfalg/bimodule.hpp"

namespace hopfalg {

class TensorSpace;
using TensorSpacePtr = std::shared_ptr<const TensorSpace>;

// A module together with the tensor structure it came from, if any. Leaves
// have no structure and their flat coordinates are their own coordinates.
struct Space {
  DoubleBimodule module;
  TensorSpacePtr structure;

  std::size_t dim() const { return module.dim(); }
  std::size_t flat_dim() const;
  std::vector<std::size_t> leaf_dims() const;
  std::vector<DoubleBimodule> leaves() const;
  // Quotient <- flat and flat <- quotient.
  Mat flat_proj() const;
  Mat flat_sect() const;
};

Space leaf(const DoubleBimodule& m);
Space leaf(const Bimodule& m);

// x (sel on factor 0) (x) y  ~  x (x) (sel on factor 1) y
struct RelationPair {
  ActionSelector on_left;
  ActionSelector on_right;
};

struct Residual {
  ActionSelector target;
  int factor;
  ActionSelector source;
};

class TensorSpace : public std::enable_shared_from_this<TensorSpace> {
 public:
  static TensorSpacePtr make(const Space& a, const Space& b, std::vector<RelationPair> pairs,
                             std::vector<Residual> residuals, bool plain = false);

  const Space& factor(int i) const { return i == 0 ? a_ : b_; }
  const QuotientPresentation& quotient() const { return q_; }
  const Mat& proj() const { return q_.proj; }
  const Mat& sect() const { return q_.sect; }
  std::size_t dim() const { return q_.dim(); }
  std::size_t ambient_dim() const { return q_.ambient_dim; }
  const DoubleBimodule& module() const { return module_; }
  const std::vector<RelationPair>& pairs() const { return pairs_; }
  Space as_space() const;

  std::size_t flat_dim() const { return flat_proj_.cols(); }
  const Mat& flat_proj() const { return flat_proj_; }
  const Mat& flat_sect() const { return flat_sect_; }
  std::vector<std::size_t> leaf_dims() const;
  std::vector<DoubleBimodule> leaves() const;

  // Action of a on the given leaf, induced on the quotient. Throws IllDefined
  // when that action does not preserve the relations.
  Mat slot_action(std::size_t leaf_index, ActionSelector sel, const Mat& a) const;
  // Projects a flat operator/column block into quotient coordinates and
  // checks it descends (flat_proj * op == X * flat_proj).
  Mat descend(const Mat& flat_op) const;

 private:
  TensorSpace() = default;
  Space a_, b_;
  std::vector<RelationPair> pairs_;
  QuotientPresentation q_;
  DoubleBimodule module_;
  Mat flat_proj_, flat_sect_;
};

// Named variants. Residual tables: tau_sigma keeps sigma from the left factor
// and tau from the right one; boxtimes and sigma_sigma keep sigma_left and
// tau_right from the right factor, sigma_right and tau_left from the left.
TensorSpacePtr tensor_over_r(const Space& a, ActionSelector sel_a, const Space& b, ActionSelector sel_b);
TensorSpacePtr tau_sigma(const Space& a, const Space& b);
TensorSpacePtr boxtimes(const Space& a, const Space& b);
TensorSpacePtr sigma_sigma(const Space& a, const Space& b);
TensorSpacePtr tau_tau(const Space& a, const Space& b);
// Plain bimodule tensor M (x)_R N: right action of M against left action of N.
TensorSpacePtr bimodule_tensor(const Space& a, const Space& b);

// x (x) y -> act(f(x)) y for an R-valued map f on the first factor.
Mat absorb_left(const ActionFamily& act, const Mat& f, std::size_t dim_second);
// x (x) y -> act(f(y)) x for an R-valued map f on the second factor.
Mat absorb_right(const ActionFamily& act, const Mat& f, std::size_t dim_first);

// Operator sending x (x) y to y (x) x on flat coordinates.
Mat swap_factors(const Field& field, std::size_t d1, std::size_t d2);

}  // namespace hopfalg
