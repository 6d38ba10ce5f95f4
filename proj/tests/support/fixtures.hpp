#pragma once

#include <random>
#include <string>
#include <vector>

#include "hopfalg/serialize.hpp"

namespace hopfalg::testing {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
Document load_fixture(const std::string& name);
Presentation load_presentation(const std::string& name);

// One object I with F(I) = R, theta the multiplication and I self-dual on
// both sides.
Presentation triv_presentation(const AlgebraPtr& r);

// k[g]/(g^2 - 1) with g grouplike and S(g) = g.
BialgebroidPtr group_algebra_c2(const Field& field);
// The monoid algebra of {1, x} with x^2 = x; beta is singular.
BialgebroidPtr monoid_bialgebra(const Field& field);

// k, k x k, k[x]/(x^2), upper triangular 2x2, k x k x k, k[x]/(x^3), M_2(k),
// k[x]/(x^4).
std::vector<AlgebraPtr> small_algebras(const Field& field);

// A sub-bimodule of R^3 cut out by a random idempotent with central entries,
// in a random basis. dim <= max_dim.
Bimodule random_summand(const AlgebraPtr& r, std::size_t max_dim, std::mt19937_64& rng);
// (k[x]/(x^j))^a (+) R^b over R = k[x]/(x^m), j < m: never projective.
Bimodule random_nonprojective(const Field& field, std::mt19937_64& rng, AlgebraPtr& r);

}  // namespace hopfalg::testing
