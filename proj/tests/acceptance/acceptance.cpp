#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include "fixtures.hpp"
#include "hopfalg/errors.hpp"
#include "hopfalg_cli/cli.hpp"
#include "oracle.hpp"

using namespace hopfalg;
using namespace hopfalg::testing;

namespace {

using S = ActionSelector;

// dim L recorded from the brute-force oracle for FIX-SWAP.
constexpr std::size_t kSwapGoldenDim = 8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool tags_pass(const Report& rep, const std::vector<std::string>& tags, Outcome& out, const std::string& where) {
  for (const auto& t : tags) {
    const CheckEntry* e = rep.find(t);
    if (!e) {
      out.fail(where + ": " + t + " was not checked");
      return false;
    }
    if (!e->pass) {
      out.fail(where + ": " + t + " failed (" + e->counterexample + ")");
      return false;
    }
  }
  return true;
}

bool invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

struct Member {
  AlgebraPtr r;
  Bimodule m;
};

std::vector<Member> population() {
  std::vector<Member> out;
  std::mt19937_64 rng(20240601);
  for (const Field& field : {Field::prime(7), Field::prime(2)}) {
    const auto algebras = small_algebras(field);
    for (std::size_t i = 0; i < 60; ++i) {
      const AlgebraPtr& r = algebras[i % algebras.size()];
      out.push_back({r, random_summand(r, 6, rng)});
    }
  }
  return out;
}

const std::vector<Member>& shared_population() {
  static const std::vector<Member> pop = population();
  return pop;
}

Outcome criterion_dual_basis() {
  Outcome out;
  const auto& pop = shared_population();
  const std::vector<std::string> left_tags{"Dual/1.6", "Dual/1.9", "Dual/1.10", "Dual/1.11"};
  const std::vector<std::string> right_tags{"RightDual/1.6", "RightDual/1.9", "RightDual/1.10", "RightDual/1.11"};
  std::size_t k = 0;
  for (const auto& mem : pop) {
    const std::string where = "member " + std::to_string(k++);
    DualData d = dual_module(mem.m);
    if (!tags_pass(check_dual(d), left_tags, out, where)) return out;
    DualData ds = dual_module(mem.m, k);
    if (!tags_pass(check_dual(ds), left_tags, out, where + " (seeded)")) return out;
    DualData rd = right_dual_module(mem.m);
    if (!tags_pass(check_dual(rd), right_tags, out, where)) return out;
  }
  std::mt19937_64 rng(77);
  std::size_t negatives = 0;
  for (const Field& field : {Field::prime(7), Field::prime(2)}) {
    for (int i = 0; i < 20; ++i) {
      AlgebraPtr r;
      Bimodule m = random_nonprojective(field, rng, r);
      try {
        dual_module(m);
        out.fail("a non-projective module over k[x]/(x^" + std::to_string(r->dim()) + ") got a dual basis");
        return out;
      } catch (const NotProjective&) {
        ++negatives;
      }
    }
  }
  out.detail = std::to_string(pop.size()) + " projective modules, " + std::to_string(negatives) + " non-projective rejected";
  return out;
}

// (L boxtimes L) boxtimes L -> L boxtimes (L boxtimes L) from the flat identity.
Mat associator(const BoxCoalgebroid& inner, const BoxCoalgebroid& outer_left, const BoxCoalgebroid& outer_right,
               std::size_t d) {
  const Field& field = inner.coalgebroid.field();
  const Mat id = Mat::identity(field, d);
  Mat flat = kron(inner.box->sect(), id) * outer_left.box->sect();
  return outer_right.box->proj() * kron(id, inner.box->proj()) * flat;
}

Outcome criterion_coalgebroid() {
  Outcome out;
  const auto& pop = shared_population();
  const std::vector<std::string> tags{"Eq.9", "Eq.10", "Eq.11", "Eq.12", "Eq.13"};
  std::size_t assoc = 0, units = 0, k = 0;
  for (const auto& mem : pop) {
    const std::string where = "member " + std::to_string(k++);
    auto l = std::make_shared<const Coalgebroid>(endo_coalgebroid(dual_module(mem.m)));
    if (!tags_pass(check_coalgebroid(*l), tags, out, where + " endo")) return out;
    auto u = std::make_shared<const Coalgebroid>(unit_coalgebroid(mem.r));
    if (!tags_pass(check_coalgebroid(*u), tags, out, where + " unit")) return out;

    if (l->dim() * u->dim() <= 64) {
      BoxCoalgebroid right = boxtimes_coalgebroid(*l, *u);
      Mat ru = right_unit_identification(*l, right);
      if (!invertible(ru) || !is_coalgebroid_morphism(right.coalgebroid, *l, ru)) {
        out.fail(where + ": right unit identification is not a coalgebroid isomorphism");
        return out;
      }
      BoxCoalgebroid left = boxtimes_coalgebroid(*u, *l);
      Mat lu = left_unit_identification(*l, left);
      if (!invertible(lu) || !is_coalgebroid_morphism(left.coalgebroid, *l, lu)) {
        out.fail(where + ": left unit identification is not a coalgebroid isomorphism");
        return out;
      }
      ++units;
    }
    if (l->dim() <= 4) {
      BoxCoalgebroid inner = boxtimes_coalgebroid(*l, *l);
      if (inner.coalgebroid.dim() * l->dim() > 32) continue;
      BoxCoalgebroid outer_left = boxtimes_coalgebroid(inner.coalgebroid, *l);
      BoxCoalgebroid outer_right = boxtimes_coalgebroid(*l, inner.coalgebroid);
      Mat a = associator(inner, outer_left, outer_right, l->dim());
      if (!invertible(a) || !is_coalgebroid_morphism(outer_left.coalgebroid, outer_right.coalgebroid, a)) {
        out.fail(where + ": associator is not a coalgebroid isomorphism");
        return out;
      }
      ++assoc;
    }
  }
  out.detail = std::to_string(pop.size()) + " endo + unit coalgebroids, " + std::to_string(units) +
               " unit isos, " + std::to_string(assoc) + " associators";
  return out;
}

std::vector<std::pair<std::string, AlgebraPtr>> triv_algebras() {
  const Field f = Field::prime(7);
  return {{"k", algebra_ground(f)},
          {"k x k", algebra_product(f, 2)},
          {"k[x]/(x^2)", algebra_truncated_polynomial(f, 2)},
          {"M_2(k)", algebra_matrix2(f)}};
}

Outcome criterion_triv() {
  Outcome out;
  for (const auto& [name, r] : triv_algebras()) {
    auto start = std::chrono::steady_clock::now();
    Presentation p = triv_presentation(r);
    const std::size_t n = r->dim();
    Reconstruction rec = reconstruct(p);
    if (!rec.report.ok()) {
      out.fail(name + ": report failed " + rec.report.failed_tags().front());
      return out;
    }
    const std::size_t expect = oracle::coend_dim(p);
    if (expect != n * n || rec.coend.dim() != expect) {
      out.fail(name + ": dim L = " + std::to_string(rec.coend.dim()) + ", oracle " + std::to_string(expect));
      return out;
    }
    // a (x) b -> [(x -> a x) (x) b]
    const Field& field = r->field();
    const DualData& d = rec.coend.duals[0];
    Mat iso(field, rec.coend.dim(), n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        iso.set_block(0, a * n + b, rec.coend.class_of(0, d.coords(r->left_mult_basis(a)), r->basis(b)));
    Coalgebroid u = unit_coalgebroid(r);
    if (!invertible(iso) || !is_coalgebroid_morphism(u, *rec.coring, iso)) {
      out.fail(name + ": R (x) R -> L is not a coalgebroid isomorphism");
      return out;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 5.0) {
      out.fail(name + ": took " + std::to_string(secs) + " s");
      return out;
    }
  }
  out.detail = "dim L = (dim R)^2 for k, k x k, k[x]/(x^2), M_2(k); explicit isomorphisms with R (x) R";
  return out;
}

Outcome criterion_c2() {
  Outcome out;
  Presentation p = load_presentation("c2.json");
  Reconstruction rec = reconstruct(p);
  const Field& field = p.field();
  if (rec.coend.dim() != 2 || oracle::coend_dim(p) != 2) {
    out.fail("dim L = " + std::to_string(rec.coend.dim()));
    return out;
  }
  const Coalgebroid& c = *rec.coring;
  for (std::size_t x = 0; x < 2; ++x) {
    const Mat& h = rec.coend.class_maps[x];
    if (!(c.coproduct_flat() * h == kron(h, h)) || !(c.counit * h == Mat::identity(field, 1))) {
      out.fail("class of " + rec.coend.names[x] + " is not grouplike");
      return out;
    }
  }
  if (!invertible(beta_map(*rec.structure, *antipode_space(*rec.structure)))) {
    out.fail("beta is singular");
    return out;
  }
  if (!rec.antipode || !rec.opposite_antipode) {
    out.fail("missing antipode or opposite antipode");
    return out;
  }
  if (!tags_pass(rec.report,
                 {"Eq.341", "Eq.342", "Eq.343", "Lemma7.1/35.0", "Lemma7.1/35", "Lemma7.1/39", "Lemma7.1/41",
                  "Lemma7.1/41b", "Lemma7.1/41c", "OpAntipode/1", "OpAntipode/2", "Lemma7.2/a", "Lemma7.2/b",
                  "Lemma7.2/c"},
                 out, "FIX-C2"))
    return out;
  if (!rec.report.ok()) {
    out.fail("report failed " + rec.report.failed_tags().front());
    return out;
  }

  // 1 -> [I], g -> [S]
  BialgebroidPtr hopf = group_algebra_c2(field);
  Mat f = Mat::hstack({rec.coend.class_maps[rec.coend.index_of("I")], rec.coend.class_maps[rec.coend.index_of("S")]});
  const Bialgebroid& l = *rec.structure;
  Antipode ha = compute_antipode(hopf);
  Mat hand_nabla = Mat::from_ints(field, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  if (!(ha.nabla_flat() == hand_nabla)) {
    out.fail("the hand-written algebra's antipode is not g -> g");
    return out;
  }
  bool ok = invertible(f) && is_coalgebroid_morphism(*hopf->base, *rec.coring, f) &&
            f * hopf->product_flat() == l.product_flat() * kron(f, f) && f * hopf->unit == l.unit &&
            kron(f, f) * ha.nabla_flat() == rec.antipode->nabla_flat() * f;
  if (!ok) {
    out.fail("L does not match k[g]/(g^2 - 1)");
    return out;
  }
  out.detail = "dim L = 2, grouplike classes, beta invertible, matches k[g]/(g^2 - 1)";
  return out;
}

Outcome criterion_swap() {
  Outcome out;
  Presentation p = load_presentation("swap.json");
  Reconstruction rec = reconstruct(p);
  if (!rec.report.ok()) {
    out.fail("report failed " + rec.report.failed_tags().front());
    return out;
  }
  if (!rec.antipode || !rec.opposite_antipode) {
    out.fail("missing antipode or opposite antipode");
    return out;
  }
  const std::size_t oracle_dim = oracle::coend_dim(p);
  if (oracle_dim != kSwapGoldenDim || rec.coend.dim() != kSwapGoldenDim) {
    out.fail("dim L = " + std::to_string(rec.coend.dim()) + ", oracle " + std::to_string(oracle_dim) + ", golden " +
             std::to_string(kSwapGoldenDim));
    return out;
  }
  const Bialgebroid& h = *rec.structure;
  const DoubleBimodule& l = rec.coend.carrier;
  const Field& field = h.field();
  const std::size_t n = h.algebra()->dim(), d = h.dim();
  bool differ = false, noncentral = false;
  for (std::size_t a = 0; a < n; ++a) {
    differ = differ || !(l.act_basis(S::sigma_left, a) == l.act_basis(S::tau_left, a)) ||
             !(l.act_basis(S::sigma_right, a) == l.act_basis(S::tau_right, a));
    Mat s = h.source(h.algebra()->basis(a));
    for (std::size_t b = 0; b < d; ++b) {
      Mat e = Mat::unit_vector(field, d, b);
      noncentral = noncentral || !(h.product_flat() * kron(s, e) == h.product_flat() * kron(e, s));
    }
  }
  if (!differ || !noncentral) {
    out.fail("sigma and tau coincide or s(R) is central");
    return out;
  }
  out.detail = "dim L = " + std::to_string(d) + " (golden), " + std::to_string(rec.report.entries().size()) +
               " registry checks pass, sigma != tau, s(R) not central";
  return out;
}

Outcome criterion_antipode() {
  Outcome out;
  std::vector<std::pair<std::string, Presentation>> cases;
  for (const auto& [name, r] : triv_algebras()) cases.push_back({"TRIV " + name, triv_presentation(r)});
  cases.push_back({"C2", load_presentation("c2.json")});
  cases.push_back({"SWAP", load_presentation("swap.json")});
  for (const auto& [name, p] : cases) {
    ReconstructOptions opt;
    opt.roundtrip = false;
    Reconstruction rec = reconstruct(p, opt);
    Antipode computed = compute_antipode(rec.structure);
    Antipode induced = induce_antipode(rec.presentation, rec.coend, rec.structure);
    if (!(computed.nabla == induced.nabla) || !(computed.nabla_flat() == induced.nabla_flat())) {
      out.fail(name + ": compute_antipode and the induced antipode differ");
      return out;
    }
  }
  try {
    compute_antipode(monoid_bialgebra(Field::prime(7)));
    out.fail("the monoid bialgebra {1, x} got an antipode");
    return out;
  } catch (const NoAntipode&) {
  }
  out.detail = std::to_string(cases.size()) + " fixtures agree exactly; singular beta gives NoAntipode";
  return out;
}

Outcome criterion_dual_comodules() {
  Outcome out;
  std::size_t count = 0;
  for (const char* file : {"c2.json", "swap.json"}) {
    ReconstructOptions opt;
    opt.roundtrip = false;
    Reconstruction rec = reconstruct(load_presentation(file), opt);
    std::vector<RightComodule> comodules = rec.coactions;
    comodules.push_back(comodule_direct_sum(rec.coactions));
    comodules.push_back(comodule_direct_sum({rec.coactions.back(), rec.coactions.back()}));
    for (std::size_t i = 0; i < comodules.size(); ++i) {
      const RightComodule& m = comodules[i];
      const std::string where = std::string(file) + " comodule " + std::to_string(i);
      for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{5}}) {
        DualData d = dual_module(m.carrier, seed);
        RightComodule dual = dual_right_comodule(*rec.antipode, m, d);
        if (!tags_pass(check_right_comodule(dual), {"Comod/coassoc", "Comod/counit"}, out, where)) return out;
        if (!tags_pass(check_dual_right_comodule(*rec.antipode, m, d, dual),
                       {"Prop7.1/43b", "Prop7.1/45", "Prop7.1/47"}, out, where))
          return out;
        DualData rd = right_dual_module(m.carrier, seed);
        RightComodule rdual = right_dual_comodule(*rec.opposite_antipode, m, rd);
        if (!tags_pass(check_right_comodule(rdual), {"Comod/coassoc", "Comod/counit"}, out, where + " right dual"))
          return out;
        if (!tags_pass(check_right_dual_comodule(*rec.opposite_antipode, m, rd, rdual),
                       {"Prop7.2/17.2", "Prop7.2/ev", "Prop7.2/db"}, out, where))
          return out;
      }
      ++count;
    }
  }
  out.detail = std::to_string(count) + " comodules, left and right duals, two dual-basis choices each";
  return out;
}

Outcome criterion_roundtrip() {
  Outcome out;
  std::vector<std::pair<std::string, Presentation>> cases;
  for (const auto& [name, r] : triv_algebras()) cases.push_back({"TRIV " + name, triv_presentation(r)});
  cases.push_back({"C2", load_presentation("c2.json")});
  Reconstruction c2;
  for (const auto& [name, p] : cases) {
    ReconstructOptions opt;
    opt.roundtrip = false;
    Reconstruction rec = reconstruct(p, opt);
    RoundtripResult rt = roundtrip_check(rec, 2);
    if (!rt.iso()) {
      out.fail(name + ": round trip is not an isomorphism (rank " + std::to_string(rt.rank) + ", dims " +
               std::to_string(rt.dim_rebuilt) + " -> " + std::to_string(rt.dim_original) + ")");
      return out;
    }
    if (name == "C2") c2 = std::move(rec);
  }
  RoundtripResult cut = roundtrip_check(c2, 2, {"S"});
  if (cut.iso() || !cut.well_defined || !cut.coalgebroid_map || !cut.injective() || cut.surjective()) {
    out.fail("deleting S: rank " + std::to_string(cut.rank) + ", dims " + std::to_string(cut.dim_rebuilt) + " -> " +
             std::to_string(cut.dim_original));
    return out;
  }
  out.detail = "isomorphisms on TRIV and C2; without S the comparison L' -> L has rank " + std::to_string(cut.rank) +
               " < " + std::to_string(cut.dim_original) + " (strict, dually a strict surjection L* -> L'*)";
  return out;
}

Outcome criterion_determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("hopfalg_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (const char* file : {"c2.json", "swap.json"}) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path target = dir / ("run" + std::to_string(run) + ".json");
      std::ostringstream sink, err;
      int code = cli::run({"hopfalg", "reconstruct", fixture_path(file), "-o", target.string(), "--seed", "11"}, sink,
                          err);
      if (code != 0) {
        out.fail(std::string(file) + ": exit " + std::to_string(code) + " " + err.str());
        return out;
      }
      outputs[run] = read_file(target.string());
    }
    if (outputs[0] != outputs[1] || outputs[0].empty()) {
      out.fail(std::string(file) + ": outputs differ");
      return out;
    }
  }
  fs::remove_all(dir);
  out.detail = "reconstruct --seed 11 twice on C2 and SWAP: byte-identical JSON";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget;
  };
  const Criterion criteria[] = {
      {"1 dual-basis suite", criterion_dual_basis, 30.0},
      {"2 coalgebroid suite", criterion_coalgebroid, 30.0},
      {"3 FIX-TRIV", criterion_triv, 20.0},
      {"4 FIX-C2", criterion_c2, 5.0},
      {"5 FIX-SWAP", criterion_swap, 10.0},
      {"6 antipode uniqueness", criterion_antipode, 0.0},
      {"7 dual comodules", criterion_dual_comodules, 0.0},
      {"8 round trip", criterion_roundtrip, 20.0},
      {"9 determinism", criterion_determinism, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.budget > 0 && secs > c.budget) o.fail("over the " + std::to_string(c.budget) + " s budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << timing << "]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
