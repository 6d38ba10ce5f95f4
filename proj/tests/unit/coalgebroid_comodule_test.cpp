#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hopfalg/errors.hpp"

using namespace hopfalg;
using namespace hopfalg::testing;

namespace {

CoalgebroidPtr endo_of(const Bimodule& m) { return std::make_shared<const Coalgebroid>(endo_coalgebroid(dual_module(m))); }

}  // namespace

TEST(Coalgebroid, UnitCoalgebroidsPass) {
  for (const auto& r : small_algebras(Field::prime(7))) {
    if (r->dim() > 3) continue;
    Report rep = check_coalgebroid(unit_coalgebroid(r));
    EXPECT_TRUE(rep.ok()) << rep.to_text();
  }
}

TEST(Coalgebroid, EndoCoalgebroidOfTwistedModule) {
  const Field f = Field::rationals();
  AlgebraPtr r = algebra_product(f, 2);
  Bimodule m = twisted_bimodule(r, Mat::from_ints(f, 2, 2, {0, 1, 1, 0}));
  CoalgebroidPtr l = endo_of(m);
  Report rep = check_coalgebroid(*l);
  EXPECT_TRUE(rep.ok()) << rep.to_text();
  EXPECT_NE(rep.find("Eq.12"), nullptr);
}

TEST(Coalgebroid, CorruptedCoproductFailsCounitLaw) {
  AlgebraPtr r = algebra_ground(Field::prime(7));
  Coalgebroid u = unit_coalgebroid(r);
  const Field& f = r->field();
  Coalgebroid bad = Coalgebroid::make(u.carrier, Mat::from_ints(f, 1, 1, {2}), u.counit);
  Report rep = check_coalgebroid(bad);
  EXPECT_FALSE(rep.passed("Eq.10"));
}

TEST(Coalgebroid, CorruptedCounitIsCaught) {
  std::mt19937_64 rng(8);
  AlgebraPtr r = algebra_product(Field::prime(7), 2);
  CoalgebroidPtr l = endo_of(random_summand(r, 4, rng));
  Coalgebroid bad = Coalgebroid::make(l->carrier, l->coproduct_flat(), l->counit.scaled(Scalar(r->field(), 2)));
  EXPECT_FALSE(check_coalgebroid(bad).ok());
}

TEST(Coalgebroid, AnchorRespectsActions) {
  std::mt19937_64 rng(9);
  AlgebraPtr r = algebra_upper_triangular2(Field::prime(7));
  CoalgebroidPtr l = endo_of(random_summand(r, 4, rng));
  EXPECT_TRUE(check_coalgebroid(*l).passed("Anchor/actions"));
  EXPECT_EQ(anchor(*l).size(), l->dim());
}

TEST(Boxtimes, UnitIdentificationsAreIsomorphisms) {
  std::mt19937_64 rng(10);
  AlgebraPtr r = algebra_product(Field::prime(7), 2);
  CoalgebroidPtr l = endo_of(random_summand(r, 4, rng));
  Coalgebroid u = unit_coalgebroid(r);
  BoxCoalgebroid right = boxtimes_coalgebroid(*l, u);
  Mat ru = right_unit_identification(*l, right);
  EXPECT_EQ(rank(ru), l->dim());
  EXPECT_TRUE(is_coalgebroid_morphism(right.coalgebroid, *l, ru));
  EXPECT_TRUE(check_coalgebroid(right.coalgebroid).ok());
}

TEST(Comodule, EndoComoduleAndDualsPass) {
  std::mt19937_64 rng(12);
  for (const auto& r : small_algebras(Field::prime(7))) {
    if (r->dim() > 3) continue;
    Bimodule m = random_summand(r, 4, rng);
    DualData d = dual_module(m);
    auto l = std::make_shared<const Coalgebroid>(endo_coalgebroid(d));
    RightComodule c = endo_comodule(l, d);
    Report rep = check_right_comodule(c);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    DualData dc = dual_module(c.carrier);
    LeftComodule left = dual_left_comodule(c, dc);
    Report lrep = check_dual_left_comodule(c, dc, left);
    EXPECT_TRUE(lrep.ok()) << lrep.to_text();
  }
}

TEST(Comodule, IdentityAndZeroAreMorphisms) {
  std::mt19937_64 rng(14);
  AlgebraPtr r = algebra_product(Field::prime(7), 2);
  Bimodule m = random_summand(r, 4, rng);
  DualData d = dual_module(m);
  auto l = std::make_shared<const Coalgebroid>(endo_coalgebroid(d));
  RightComodule c = endo_comodule(l, d);
  const Field& f = r->field();
  EXPECT_TRUE(is_comodule_morphism(c, c, Mat::identity(f, c.dim())));
  EXPECT_TRUE(is_comodule_morphism(c, c, Mat(f, c.dim(), c.dim())));
  if (c.dim() > 1) {
    Mat off(f, c.dim(), c.dim());
    off.set_int(0, c.dim() - 1, 1);
    if (!intertwines(c.carrier, c.carrier, off)) {
      EXPECT_FALSE(is_comodule_morphism(c, c, off));
    }
  }
}
