#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clifford/algebra_class.hpp"
#include "clifford/linalg.hpp"
#include "clifford/parser.hpp"

namespace clifford {

// Sorted (index, coefficient) pairs with no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// c_{ijk} with b_i b_j = sum_k c_{ijk} b_k, stored sparsely per (i, j).
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), products_(dim * dim) {}

  std::size_t dimension() const { return dim_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, SparseVector coords);

  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  // L_i with L_i(k, j) = c_{ijk}: column j holds the coordinates of b_i b_j.
  Matrix left_multiplication(std::size_t i) const;

  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> products_;
};

struct RegularRepresentation {
  std::vector<Multivector> basis;
  StructureConstants constants;

  Matrix left_multiplication(std::size_t i) const { return constants.left_multiplication(i); }
};

// Structure constants of span(basis) under `product`. Throws NotIndependent
// if the basis is linearly dependent and NotClosed if some product leaves
// the span.
RegularRepresentation regular_representation(std::span<const Multivector> basis, const ProductFn& product);
RegularRepresentation regular_representation(const Signature& sig, std::span<const BasisBlade> blades,
                                             const ProductFn& product);

// Isomorphism fingerprint of an associative algebra: dimension, dimension of
// the center, and the inertia of the trace form B(x, y) = tr(L_x L_y) on the
// whole algebra and on its center.
struct StructuralInvariants {
  std::size_t dimension = 0;
  std::size_t center_dimension = 0;
  Inertia trace_form;
  Inertia center_trace_form;

  friend bool operator==(const StructuralInvariants&, const StructuralInvariants&) = default;
};

std::string to_string(const StructuralInvariants& inv);
nlohmann::json to_json(const StructuralInvariants& inv);

// Throws NotAssociative when a sampled triple fails (ab)c = a(bc).
StructuralInvariants structural_invariants(const StructureConstants& constants);

// Explicit realization of a class: matrix units E_ab (x) (R, C or H basis),
// direct-summed over the components.
StructureConstants reference_realization(const AlgebraClass& cls);

// Fingerprint of the reference realization. The fingerprint is additive over
// direct sums, so it is assembled from cached per-component fingerprints.
StructuralInvariants expected_invariants(const AlgebraClass& cls);

}  // namespace clifford
