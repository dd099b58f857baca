#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "clifford/grading.hpp"
#include "clifford/structure.hpp"

namespace clifford {

// g_alpha(u, v) = g(u0, v0) - g(u1, v1) for 1-vectors u, v. Throws NotAVector.
Rational deformed_metric(const Multivector& u, const Multivector& v, const Z2Grading& gr);

// (r, s) = (p0 + q1, q0 + p1): the signature realized by the vee_alpha product.
Signature target_signature(const Z2Grading& gr);

// Deformed Clifford product on V^. On a vector, v vee b = v ^ b + alpha(v) _| b;
// a blade factors into orthonormal generators and the vector rule is folded
// from the right, then everything extends bilinearly.
Multivector vee_alpha(const Multivector& a, const Multivector& b, const Z2Grading& gr);

// Same product for a 1-vector v written with the original Clifford product:
// v vee a = v0 a + parity(a) v1. Throws NotAVector.
Multivector vee_alpha_from_clifford(const Multivector& v, const Multivector& a, const Z2Grading& gr);

// Tilt to the opposite metric: b0 a0 + b0 a1 + b1 a0 - b1 a1 with the usual
// even/odd grade split.
Multivector tilt_product(const Multivector& a, const Multivector& b);

// Alternative deformation: a vee' b = sum_{ij} (-1)^{ij} b_j a_i over the
// alpha-parity components a_i = pi_i(a), b_j = pi_j(b).
Multivector vee_prime(const Multivector& a, const Multivector& b, const Z2Grading& gr);

// sum_{ij} (-1)^{ij} (y_i vee' x_j - x_j vee' y_i) / 2, which equals x ^ y for
// every grading.
Multivector wedge_from_vee_prime(const Multivector& x, const Multivector& y, const Z2Grading& gr);
// (x vee' y - y vee' x) / 2, which only equals x ^ y for special gradings.
Multivector naive_wedge_from_vee_prime(const Multivector& x, const Multivector& y, const Z2Grading& gr);

struct WedgeWitness {
  Multivector x;
  Multivector y;
  Multivector wedge;  // x ^ y
  Multivector naive;  // (x vee' y - y vee' x) / 2
  Multivector full;   // weighted sum, always equal to x ^ y
};

// Searches basis-vector pairs in lexicographic order, then `random_trials`
// seeded random vector pairs, for x, y with naive != x ^ y.
std::optional<WedgeWitness> find_wedge_counterexample(const Z2Grading& gr, std::uint64_t seed = 7,
                                                      int random_trials = 200);

struct CliffordMapOptions {
  std::uint64_t seed = 20021;
  // Blade triples are checked exhaustively up to this n, sampled beyond it.
  int exhaustive_max_n = 4;
  int random_triples = 1000;
  bool check_structure = true;
};

struct CliffordMapReport {
  Signature target;
  std::size_t relation_checks = 0;
  std::size_t relation_violations = 0;
  std::size_t associativity_checks = 0;
  std::size_t associativity_violations = 0;
  bool structure_checked = false;
  StructuralInvariants observed;  // (V^, vee_alpha)
  StructuralInvariants expected;  // reference fingerprint of Cl(r, s)

  bool passed() const {
    return relation_violations == 0 && associativity_violations == 0 && (!structure_checked || observed == expected);
  }
  std::string detail() const;
};

// Checks that vee_alpha realizes Cl(r, s): the generator relations
// e_i e_j + e_j e_i = 2 g_alpha(e_i, e_j), associativity, and the structural
// fingerprint of (V^, vee_alpha) against Cl(target_signature(gr)).
CliffordMapReport verify_clifford_map(const Z2Grading& gr, const CliffordMapOptions& options = {});

}  // namespace clifford
