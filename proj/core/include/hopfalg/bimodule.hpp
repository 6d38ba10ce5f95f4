#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/algebra.hpp"

namespace hopfalg {

// One operator per algebra basis element.
using ActionFamily = std::vector<Mat>;

enum class ActionSelector { sigma_left, sigma_right, tau_left, tau_right };

bool is_left(ActionSelector s);
const char* selector_name(ActionSelector s);
ActionSelector parse_selector(const std::string& name);

// Operator of a (coefficient column) under the family.
Mat act(const ActionFamily& family, const Mat& a);

struct Bimodule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::optional<ActionFamily> left;
  std::optional<ActionFamily> right;

  Mat left_op(const Mat& a) const { return act(*left, a); }
  Mat right_op(const Mat& a) const { return act(*right, a); }
};

class DoubleBimodule {
 public:
  DoubleBimodule() = default;
  DoubleBimodule(AlgebraPtr algebra, std::size_t dim);

  // tau := native actions; sigma selectors alias them.
  static DoubleBimodule from_bimodule(const Bimodule& m);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  bool plain() const { return plain_; }

  bool has(ActionSelector s) const;
  const ActionFamily& family(ActionSelector s) const;
  Mat act(ActionSelector s, const Mat& a) const;
  const Mat& act_basis(ActionSelector s, std::size_t i) const { return family(s)[i]; }
  void set(ActionSelector s, ActionFamily f);
  void mark_plain() { plain_ = true; }

  Bimodule tau_pair() const;
  Bimodule sigma_pair() const;

 private:
  std::size_t slot(ActionSelector s) const;
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::array<std::optional<ActionFamily>, 4> actions_;
  bool plain_ = false;
};

Report check_bimodule(const Bimodule& m);
Report check_bimodule(const DoubleBimodule& m);

// Does mat (dst x src) intertwine every action present on both sides?
bool intertwines(const DoubleBimodule& src, const DoubleBimodule& dst, const Mat& mat);
bool intertwines(const Bimodule& src, const Bimodule& dst, const Mat& mat);

Bimodule regular_bimodule(const AlgebraPtr& r);
// R with right action twisted: m . a = m alpha(a); alpha given as an n x n matrix.
Bimodule twisted_bimodule(const AlgebraPtr& r, const Mat& alpha);
// e R as a right module (no left action unless e is central).
Bimodule idempotent_right_module(const AlgebraPtr& r, const Mat& e, bool central);
Bimodule direct_sum(const std::vector<Bimodule>& parts);
// Same module in the basis given by the columns of p.
Bimodule change_basis(const Bimodule& m, const Mat& p);
Bimodule free_bimodule(const AlgebraPtr& r, std::size_t rank);

}  // namespace hopfalg
