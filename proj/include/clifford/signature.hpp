#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace clifford {

// Largest supported p + q. Blades are stored as 32-bit masks and the dense
// oracle computations scale like 2^n.
inline constexpr int kMaxDimension = 12;

// Diagonal metric on the standard orthonormal basis: e_1..e_p square to +1,
// e_{p+1}..e_{p+q} square to -1.
class Signature {
 public:
  Signature() = default;
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dimension() const { return p_ + q_; }

  // g(e_i, e_i) for a 1-based index. Throws IndexOutOfRange.
  int square(int index) const;
  bool contains(int index) const { return index >= 1 && index <= dimension(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_ = 0;
  int q_ = 0;
};

std::string to_string(const Signature& sig);

// A canonical product of distinct basis vectors, stored as a bitmask where
// bit i-1 stands for e_i.
class BasisBlade {
 public:
  using Mask = std::uint32_t;

  constexpr BasisBlade() = default;
  static constexpr BasisBlade from_mask(Mask mask) { return BasisBlade(mask); }
  // 1-based indices in any order; duplicates are rejected.
  static BasisBlade from_indices(std::span<const int> indices);
  static BasisBlade from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static BasisBlade vector(int index) { return from_indices({index}); }

  constexpr Mask mask() const { return mask_; }
  int grade() const;
  bool is_scalar() const { return mask_ == 0; }
  bool contains(int index) const { return index >= 1 && index <= 32 && ((mask_ >> (index - 1)) & 1U) != 0; }
  // Largest index present, 0 for the scalar blade.
  int highest_index() const;
  std::vector<int> indices() const;

  friend constexpr bool operator==(BasisBlade, BasisBlade) = default;
  // Canonical order: by grade, then lexicographically by sorted index list.
  friend std::strong_ordering operator<=>(BasisBlade a, BasisBlade b);

 private:
  explicit constexpr BasisBlade(Mask mask) : mask_(mask) {}
  Mask mask_ = 0;
};

// "1" for the scalar blade, otherwise "e1^e3^e4".
std::string to_string(BasisBlade blade);

// (-1) raised to the number of transpositions needed to merge the index
// sequences of a and b into increasing order.
int reordering_sign(BasisBlade::Mask a, BasisBlade::Mask b);

struct BladeProduct {
  int sign = 0;  // 0 means the product vanishes
  BasisBlade blade;
};

// Clifford product of two basis blades. Throws IndexOutOfRange when a blade
// uses an index outside 1..n.
BladeProduct blade_product(BasisBlade a, BasisBlade b, const Signature& sig);

// All 2^n blades of the signature in canonical order.
std::vector<BasisBlade> all_blades(const Signature& sig);

}  // namespace clifford
