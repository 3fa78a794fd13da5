#pragma once

// Seeded generators of small homogeneous test data.

#include <random>
#include <string>
#include <vector>

#include "gradua/gmod.hpp"

namespace gradua::testing {

using Rng = std::mt19937_64;

// Polynomial ring in x, y[, z] with unit weights.
GRingPtr random_ring(Rng& rng, int max_vars, Field field = Field::rationals());

// A random monomial of the given degree.
Polynomial random_monomial(Rng& rng, const GradedRing& R, int degree);
// Sum of up to `terms` random monomials of the given degree with small coefficients.
Polynomial random_form(Rng& rng, const GradedRing& R, int degree, int terms);

// Monomial ideal with 1..max_gens generators of degree in [min_deg, max_deg].
HomogeneousIdeal random_monomial_ideal(Rng& rng, const GRingPtr& R, int max_gens, int min_deg, int max_deg);
// Ideal generated by random forms (not necessarily monomial).
HomogeneousIdeal random_ideal(Rng& rng, const GRingPtr& R, int max_gens, int max_deg);

// R/J as a cyclic module.
SubquotientModule cyclic_module(const HomogeneousIdeal& J);
// The ideal J as a submodule of R.
SubquotientModule ideal_module(const HomogeneousIdeal& J);

// A small monomial subquotient of R^r with r <= 2 and random twists.
SubquotientModule random_monomial_module(Rng& rng, const GRingPtr& R);

}  // namespace gradua::testing
