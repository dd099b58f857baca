#pragma once

#include <cstdint>
#include <vector>

#include "clifford/algebra_class.hpp"
#include "clifford/grading.hpp"
#include "clifford/report.hpp"
#include "clifford/structure.hpp"

namespace clifford {

// Division-algebra parts of the periodicity tables, keyed by p - q (mod 8)
// and, for even subalgebras of gradings, p0 - q0 (mod 4). Negative keys are
// reduced mathematically.
AlgebraClass clifford_division_part(int p_minus_q);
AlgebraClass even_part_division_part(int p_minus_q);
AlgebraClass graded_even_division_part(int p_minus_q, int p0_minus_q0);

// Cl(p,q) = M(m,R) (x) A with m^2 dim A = 2^n.
AlgebraClass classify_clifford(int p, int q);
// Usual even part Cl+(p,q) = M(m,R) (x) B with m^2 dim B = 2^(n-1); needs p + q >= 1.
AlgebraClass classify_even_part(int p, int q);
// Complex Clifford algebra Cl_n(C), as a class of complex algebras.
AlgebraClass classify_complex(int n);

// Even subalgebra of a structure-preserving grading with (p0, q0) even
// generators: Cl(p0,q0) (x) Cl+(p-p0, q-q0), simplified. Throws
// InvalidArgument if (p0, q0) is out of range.
AlgebraClass classify_even_subalgebra(int p, int q, int p0, int q0);

// Direct lookup M(k,R) (x) D with k^2 dim D = 2^(n-1); only defined for
// nontrivial gradings, (p0, q0) != (p, q).
AlgebraClass even_subalgebra_table_lookup(int p, int q, int p0, int q0);

struct Table4Options {
  int max_n = 6;
  // Draw the odd set uniformly among subsets with the same (p0, q0) instead
  // of the canonical "last indices" choice.
  bool randomize_odd_sets = false;
  std::uint64_t seed = 20021;
  unsigned threads = 1;
};

struct Table4Cell {
  int p = 0, q = 0, p0 = 0, q0 = 0;
  Z2Grading grading;
  AlgebraClass predicted{};           // classify_even_subalgebra
  bool table_agrees = false;        // predicted == table lookup (or full algebra when trivial)
  StructuralInvariants observed{};    // oracle on the even blade subalgebra
  StructuralInvariants expected{};    // expected_invariants(predicted)
  double millis = 0.0;
  bool pass() const { return table_agrees && observed == expected; }
};

// Oracle sweep over every (p, q) with p + q <= max_n and every (p0, q0).
std::vector<Table4Cell> sweep_table4(const Table4Options& options);
Report verify_table4(const Table4Options& options);
Report to_report(const std::vector<Table4Cell>& cells);

}  // namespace clifford
