#include "clifford/signature.hpp"

#include <algorithm>
#include <bit>

#include "clifford/errors.hpp"

namespace clifford {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw InvalidArgument("signature counts must be non-negative");
  if (p + q > kMaxDimension) {
    throw InvalidArgument("p + q = " + std::to_string(p + q) + " exceeds the cap of " +
                          std::to_string(kMaxDimension));
  }
}

int Signature::square(int index) const {
  if (!contains(index)) {
    throw IndexOutOfRange("basis index " + std::to_string(index) + " outside 1.." +
                          std::to_string(dimension()));
  }
  return index <= p_ ? 1 : -1;
}

std::string to_string(const Signature& sig) {
  return "(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) + ")";
}

BasisBlade BasisBlade::from_indices(std::span<const int> indices) {
  Mask mask = 0;
  for (int i : indices) {
    if (i < 1 || i > 32) throw IndexOutOfRange("basis index " + std::to_string(i) + " is not representable");
    Mask bit = Mask{1} << (i - 1);
    if (mask & bit) throw InvalidArgument("repeated basis index " + std::to_string(i));
    mask |= bit;
  }
  return BasisBlade(mask);
}

int BasisBlade::grade() const { return std::popcount(mask_); }

int BasisBlade::highest_index() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

std::vector<int> BasisBlade::indices() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(BasisBlade a, BasisBlade b) {
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  for (BasisBlade::Mask x = a.mask_, y = b.mask_; x != 0; x &= x - 1, y &= y - 1) {
    int ia = std::countr_zero(x);
    int ib = std::countr_zero(y);
    if (ia != ib) return ia <=> ib;
  }
  return std::strong_ordering::equal;
}

std::string to_string(BasisBlade blade) {
  if (blade.is_scalar()) return "1";
  std::string out;
  for (int i : blade.indices()) {
    if (!out.empty()) out += '^';
    out += 'e' + std::to_string(i);
  }
  return out;
}

int reordering_sign(BasisBlade::Mask a, BasisBlade::Mask b) {
  // Each index of b must pass over every larger index of a.
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_product(BasisBlade a, BasisBlade b, const Signature& sig) {
  const int n = sig.dimension();
  if (a.highest_index() > n || b.highest_index() > n) {
    throw IndexOutOfRange("blade " + to_string(std::max(a, b)) + " outside signature " + to_string(sig));
  }
  int sign = reordering_sign(a.mask(), b.mask());
  // Repeated generators square to their metric value; only the negative
  // ones (indices above p) change the sign.
  BasisBlade::Mask common = a.mask() & b.mask();
  BasisBlade::Mask negative = common >> sig.p();
  if (std::popcount(negative) & 1) sign = -sign;
  return {sign, BasisBlade::from_mask(a.mask() ^ b.mask())};
}

std::vector<BasisBlade> all_blades(const Signature& sig) {
  const int n = sig.dimension();
  std::vector<BasisBlade> out;
  out.reserve(std::size_t{1} << n);
  for (BasisBlade::Mask m = 0; m < (BasisBlade::Mask{1} << n); ++m) out.push_back(BasisBlade::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clifford
