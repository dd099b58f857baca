#pragma once

#include <random>

#include "clifford/multivector.hpp"

namespace clifford {

// Seeded generators for randomized property checks. Coefficients are small
// rationals n/d with |n| <= 5 and d in {1, 2, 3}.
Rational random_coefficient(std::mt19937_64& rng);
BasisBlade random_blade(const Signature& sig, std::mt19937_64& rng);
Multivector random_multivector(const Signature& sig, std::mt19937_64& rng, int max_terms = 6);
Multivector random_vector(const Signature& sig, std::mt19937_64& rng);

}  // namespace clifford
