#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/antipode.hpp"

namespace hopfalg {

struct PresentationObject {
  std::string name;
  Bimodule module;  // F(X); the tau actions
};

enum class MorphismOrigin { generator, tensor_left, tensor_right, evaluation, coevaluation };

struct PresentationMorphism {
  std::string name;
  std::string src;
  std::string dst;
  Mat matrix;  // dim F(dst) x dim F(src)
  MorphismOrigin origin = MorphismOrigin::generator;
};

// theta : F(left) (x)_R F(right) -> F(result), given on flat k-tensors.
struct TensorEntry {
  std::string left;
  std::string right;
  std::string result;
  Mat theta;  // dim F(result) x (dim F(left) * dim F(right))
};

// Left duals: ev on F(dual) (x) F(object) -> F(I), db : F(I) -> F(object) (x) F(dual).
// Right duals: ev on F(object) (x) F(dual) -> F(I), db : F(I) -> F(dual) (x) F(object).
struct DualEntry {
  std::string object;
  std::string dual;
  Mat ev;
  Mat db;
};

struct Presentation {
  AlgebraPtr algebra;
  std::vector<PresentationObject> objects;
  std::vector<PresentationMorphism> morphisms;
  std::vector<TensorEntry> tensor;
  std::vector<DualEntry> duals;
  std::vector<DualEntry> right_duals;
  std::string unit_object;
  Mat unit_iso;  // eta : F(I) -> R, n x dim F(I)

  const Field& field() const { return algebra->field(); }
  std::optional<std::size_t> object_index(const std::string& name) const;
  const PresentationObject& object(const std::string& name) const;
  const TensorEntry* tensor_entry(const std::string& left, const std::string& right) const;
  const DualEntry* dual_of(const std::string& object) const;
  const DualEntry* right_dual_of(const std::string& object) const;
};

// Typing, closure, theta coherence, unit law, zigzags and projectivity.
Report validate_presentation(const Presentation& p);

// Adds f (x) id_Z and id_Z (x) f for every generator f and object Z, and
// F(ev), F(db) for every dual entry. Idempotent.
Presentation augment_morphisms(const Presentation& p);

struct CoendResult {
  AlgebraPtr algebra;
  std::vector<std::string> names;
  std::vector<Bimodule> modules;
  std::vector<DualData> duals;
  std::vector<std::size_t> offsets;  // block offsets in L0
  std::size_t ambient_dim = 0;       // dim L0
  QuotientPresentation quotient;     // L0 -> L
  DoubleBimodule carrier;            // L with the descended actions
  std::vector<Mat> class_maps;       // iota_X : F(X)* (x)_k F(X) -> L

  std::size_t dim() const { return carrier.dim(); }
  std::size_t block_dim(std::size_t x) const { return duals[x].dual_dim() * modules[x].dim; }
  std::size_t index_of(const std::string& name) const;
  // Class of phi_t (x) e_i in block x.
  Mat class_of(std::size_t x, const Mat& functional_coords, const Mat& element) const;
};

struct Arrow {
  std::size_t src;
  std::size_t dst;
  Mat matrix;
};

// Coend of the finite diagram given by the modules and arrows. Throws
// NotProjective or IllDefined.
CoendResult coend_of(const AlgebraPtr& r, std::vector<std::string> names, std::vector<Bimodule> modules,
                     const std::vector<Arrow>& arrows);

// Expects an augmented presentation.
CoendResult build_coend(const Presentation& p);

// Delta and epsilon pushed from the endo coalgebroids. `duals` overrides the
// dual bases used, for the basis-independence check.
Coalgebroid induce_coring(const CoendResult& c, const std::vector<DualData>* duals = nullptr);

// Product through theta and unit through eta.
BialgebroidPtr induce_product(const Presentation& p, const CoendResult& c, const CoalgebroidPtr& coring);

// nabla from the left dual table; requires a dual for every object.
Antipode induce_antipode(const Presentation& p, const CoendResult& c, const BialgebroidPtr& h,
                         std::optional<std::uint64_t> seed = std::nullopt);
OppositeAntipode induce_opposite_antipode(const Presentation& p, const CoendResult& c, const BialgebroidPtr& h,
                                          std::optional<std::uint64_t> seed = std::nullopt);

// delta_X(m) = sum_i m_i (x) iota_X(phi^i (x) m), one per object.
std::vector<RightComodule> coactions(const CoendResult& c, const CoalgebroidPtr& coring);

// Comodule maps between two comodules over the same coalgebroid, as a basis.
std::vector<Mat> comodule_homs(const RightComodule& src, const RightComodule& dst);
RightComodule comodule_direct_sum(const std::vector<RightComodule>& parts);
// phi (x) m -> sigma(phi(m_(0))) m_(1) on M* (x)_k M.
Mat coefficient_map(const RightComodule& m, const DualData& d);

struct ReconstructOptions {
  std::uint64_t seed = 0;
  std::size_t roundtrip_rank = 2;
  bool roundtrip = true;
};

struct RoundtripResult {
  std::size_t dim_original = 0;
  std::size_t dim_rebuilt = 0;
  std::size_t rank = 0;  // rank of the canonical map
  bool well_defined = false;
  bool coalgebroid_map = false;
  bool injective() const { return rank == dim_rebuilt; }
  bool surjective() const { return rank == dim_original; }
  bool iso() const { return well_defined && coalgebroid_map && injective() && surjective(); }
};

struct Reconstruction {
  Presentation presentation;  // augmented
  CoendResult coend;
  CoalgebroidPtr coring;
  BialgebroidPtr structure;
  std::optional<Antipode> antipode;
  std::optional<OppositeAntipode> opposite_antipode;
  std::vector<RightComodule> coactions;
  std::optional<RoundtripResult> roundtrip;
  Report report;
};

// Rebuilds a Coend from the comodules (minus `excluded`) and their direct
// sums of at most `rank_bound` summands, with every comodule map between
// them, and compares it with the original L through the canonical map.
RoundtripResult roundtrip_check(const Reconstruction& r, std::size_t rank_bound,
                                const std::vector<std::string>& excluded = {});

// Runs the whole pipeline. A presentation failing validation comes back with
// the failures in the report and no structure.
Reconstruction reconstruct(const Presentation& p, const ReconstructOptions& options = {});

}  // namespace hopfalg
