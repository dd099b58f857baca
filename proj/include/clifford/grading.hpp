#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <json.hpp>

#include "clifford/linalg.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

// Signature data of a grading: (p0, q0) for the alpha-even vectors,
// (p1, q1) for the alpha-odd ones.
struct GradingCounts {
  int p0 = 0;
  int q0 = 0;
  int p1 = 0;
  int q1 = 0;
  friend bool operator==(const GradingCounts&, const GradingCounts&) = default;
};

// A Z2-grading of Cl(p,q) that preserves the multivector structure, in the
// normal form where V1 is spanned by a subset of the standard basis. V0 and
// V1 are orthogonal and complementary by construction.
class Z2Grading {
 public:
  Z2Grading(Signature sig, BasisBlade odd_set);

  static Z2Grading trivial(Signature sig) { return Z2Grading(sig, BasisBlade{}); }
  static Z2Grading usual(Signature sig);
  static Z2Grading from_odd_indices(Signature sig, std::span<const int> odd_indices);
  // Odd set = the last p - p0 positive and the last q - q0 negative indices.
  static Z2Grading canonical(Signature sig, int p0, int q0);

  const Signature& signature() const { return sig_; }
  BasisBlade odd_set() const { return odd_; }
  bool is_odd(int index) const { return odd_.contains(index); }
  bool is_trivial() const { return odd_.is_scalar(); }
  bool is_usual() const;

  // 0 when the blade is alpha-even, 1 when alpha-odd.
  int parity_of(BasisBlade blade) const;
  GradingCounts counts() const;

  friend bool operator==(const Z2Grading&, const Z2Grading&) = default;

 private:
  Signature sig_;
  BasisBlade odd_;
};

// "odd{e1,e3}" style label, "trivial" / "usual" for the extremes.
std::string to_string(const Z2Grading& gr);

Multivector alpha(const Multivector& a, const Z2Grading& gr);
Multivector project_even(const Multivector& a, const Z2Grading& gr);
Multivector project_odd(const Multivector& a, const Z2Grading& gr);

// Blades with an even number of odd-set indices, in canonical order.
std::vector<BasisBlade> even_subalgebra_basis(const Z2Grading& gr);

enum class DimensionCase { Trivial, Half };

struct DimensionCheck {
  DimensionCase kind;
  std::size_t even_dimension = 0;
};

// Classifies dim Cl0 as 2^n or 2^(n-1). Throws Error if the even basis has
// any other size, which no structure-preserving grading can produce.
DimensionCheck dimension_dichotomy_check(const Z2Grading& gr);

struct ClosureViolation {
  BasisBlade left;
  BasisBlade right;
};

struct ClosureReport {
  std::size_t pairs_checked = 0;
  std::vector<ClosureViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Multiplies every blade pair and checks Cl_i Cl_j lands in Cl_{i+j mod 2}.
ClosureReport grading_closure_check(const Z2Grading& gr);

// For a nontrivial grading: left multiplication by the first odd basis
// vector maps Cl0 onto Cl1 bijectively (full rank over the blade basis).
bool odd_multiplication_is_bijective(const Z2Grading& gr);

// Candidate alpha restricted to V, as an n x n matrix in the standard basis
// (column j is the image of e_{j+1}).
struct Involution {
  Matrix matrix;
};

struct InvolutionData {
  GradingCounts counts;
  Matrix even_basis;  // columns span V0
  Matrix odd_basis;   // columns span V1
  bool orthogonal = false;  // g(V0, V1) == 0
  Z2Grading normal_form;    // basis-aligned grading with the same counts
};

// Diagonal Gram matrix of the standard basis.
Matrix metric_matrix(const Signature& sig);

// Accepts iff the matrix squares to the identity (else NotInvolution) and
// preserves g (else NotIsometry); returns the metric signature of each
// eigenspace.
InvolutionData validate_involution(const Involution& inv, const Signature& sig);

// Array of n arrays of n entries; entries are "num/den" strings or integers.
Involution involution_from_json(const nlohmann::json& j);
Involution load_involution(const std::filesystem::path& path);

}  // namespace clifford
