#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hopfalg/errors.hpp"

using namespace hopfalg;
using namespace hopfalg::testing;

TEST(Bialgebroid, GroupAlgebraIsAHopfAlgebra) {
  BialgebroidPtr h = group_algebra_c2(Field::prime(7));
  Report rep = check_coalgebroid(*h->base);
  rep.merge(check_bialgebroid(*h));
  EXPECT_TRUE(rep.ok()) << rep.to_text();
  Antipode a = compute_antipode(h);
  Report arep = check_antipode_axioms(a);
  arep.merge(check_antipode_identities(a));
  EXPECT_TRUE(arep.ok()) << arep.to_text();
  OppositeAntipode o = compute_opposite_antipode(h);
  Report orep = check_opposite_antipode(o);
  EXPECT_TRUE(orep.ok()) << orep.to_text();
}

TEST(Bialgebroid, UnitBialgebroidHasAnAntipode) {
  for (const auto& r : {algebra_ground(Field::prime(7)), algebra_product(Field::prime(7), 2),
                        algebra_truncated_polynomial(Field::prime(7), 2)}) {
    BialgebroidPtr h = unit_bialgebroid(r);
    Report rep = check_bialgebroid(*h);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    Antipode a = compute_antipode(h);
    EXPECT_TRUE(check_antipode_axioms(a).ok());
  }
}

TEST(Bialgebroid, CorruptedProductFails) {
  const Field f = Field::prime(7);
  BialgebroidPtr h = group_algebra_c2(f);
  // g g = 2g: Delta and epsilon stop being multiplicative
  Mat product = Mat::from_ints(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 2});
  Mat unit = Mat::from_ints(f, 2, 1, {1, 0});
  Mat coproduct = Mat::from_ints(f, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  Mat counit = Mat::from_ints(f, 1, 2, {1, 1});
  BialgebroidPtr bad = classical_bialgebra(f, 2, product, unit, coproduct, counit);
  EXPECT_FALSE(check_bialgebroid(*bad).ok());
}

TEST(Antipode, SingularBetaThrows) {
  BialgebroidPtr h = monoid_bialgebra(Field::prime(7));
  EXPECT_TRUE(check_bialgebroid(*h).ok());
  Mat beta = beta_map(*h, *antipode_space(*h));
  EXPECT_LT(rank(beta), beta.cols());
  EXPECT_THROW(compute_antipode(h), NoAntipode);
}

TEST(Antipode, WrongNablaFailsTheAxioms) {
  BialgebroidPtr h = group_algebra_c2(Field::prime(7));
  Antipode a = compute_antipode(h);
  a.nabla = a.nabla.scaled(Scalar(h->field(), 2));
  EXPECT_FALSE(check_antipode_axioms(a).ok());
}

TEST(Comodule, TensorOfComodulesOverAHopfAlgebra) {
  BialgebroidPtr h = group_algebra_c2(Field::prime(7));
  RightComodule one = unit_comodule(h);
  EXPECT_TRUE(check_right_comodule(one).ok());
  RightComodule two = comodule_tensor(h, one, one);
  EXPECT_TRUE(check_right_comodule(two).ok());
  EXPECT_EQ(two.dim(), 1u);
}
