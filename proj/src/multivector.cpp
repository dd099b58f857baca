#include "clifford/multivector.hpp"

#include <bit>
#include <utility>

#include "clifford/errors.hpp"

namespace clifford {

Multivector::Multivector(Signature sig, Terms terms) : sig_(sig), terms_(std::move(terms)) {
  const int n = sig_.dimension();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.highest_index() > n) {
      throw IndexOutOfRange("blade " + to_string(it->first) + " outside signature " + to_string(sig_));
    }
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

Multivector Multivector::scalar(Signature sig, const Rational& value) {
  return blade(sig, BasisBlade{}, value);
}

Multivector Multivector::blade(Signature sig, BasisBlade blade, const Rational& coefficient) {
  Multivector m(sig);
  m.add_term(blade, coefficient);
  return m;
}

Multivector Multivector::basis_vector(Signature sig, int index) {
  if (!sig.contains(index)) {
    throw IndexOutOfRange("e" + std::to_string(index) + " outside signature " + to_string(sig));
  }
  return blade(sig, BasisBlade::vector(index));
}

Rational Multivector::coefficient(BasisBlade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Multivector::is_homogeneous(int grade) const {
  for (const auto& [blade, c] : terms_) {
    if (blade.grade() != grade) return false;
  }
  return true;
}

void Multivector::add_term(BasisBlade blade, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (blade.highest_index() > sig_.dimension()) {
    throw IndexOutOfRange("blade " + to_string(blade) + " outside signature " + to_string(sig_));
  }
  auto [it, inserted] = terms_.try_emplace(blade, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void Multivector::check_compatible(const Multivector& other) const {
  if (sig_ != other.sig_) {
    throw SignatureMismatch("operands live over " + to_string(sig_) + " and " + to_string(other.sig_));
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  check_compatible(other);
  for (const auto& [blade, c] : other.terms_) add_term(blade, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  check_compatible(other);
  for (const auto& [blade, c] : other.terms_) add_term(blade, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [blade, c] : terms_) c *= factor;
  return *this;
}

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature()) {
    throw SignatureMismatch("operands live over " + to_string(a.signature()) + " and " +
                            to_string(b.signature()));
  }
}

namespace {

// Bilinear extension of a blade-level product. `op` returns a BladeProduct
// whose sign is 0 when the pair contributes nothing.
template <class BladeOp>
Multivector bilinear(const Multivector& a, const Multivector& b, BladeOp op) {
  require_same_signature(a, b);
  Multivector out(a.signature());
  Rational term;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      BladeProduct r = op(ba, bb);
      if (r.sign == 0) continue;
      term = ca * cb;
      if (r.sign < 0) term = -term;
      out.add_term(r.blade, term);
    }
  }
  return out;
}

template <class Scale>
Multivector map_by_grade(const Multivector& a, Scale scale) {
  Multivector::Terms terms;
  for (const auto& [blade, c] : a.terms()) {
    int s = scale(blade.grade());
    if (s != 0) terms.emplace(blade, s > 0 ? c : Rational(-c));
  }
  return Multivector(a.signature(), std::move(terms));
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  const Signature sig = a.signature();
  return bilinear(a, b, [&sig](BasisBlade x, BasisBlade y) { return blade_product(x, y, sig); });
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  return bilinear(a, b, [](BasisBlade x, BasisBlade y) -> BladeProduct {
    if (x.mask() & y.mask()) return {};
    return {reordering_sign(x.mask(), y.mask()), BasisBlade::from_mask(x.mask() | y.mask())};
  });
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  const Signature sig = a.signature();
  return bilinear(a, b, [&sig](BasisBlade x, BasisBlade y) -> BladeProduct {
    // Nonzero only when x is a sub-blade of y; then the Clifford product is
    // the single blade y \ x of grade |y| - |x|.
    if ((x.mask() & y.mask()) != x.mask()) return {};
    return blade_product(x, y, sig);
  });
}

Multivector right_contraction(const Multivector& b, const Multivector& a) {
  const Signature sig = b.signature();
  return bilinear(b, a, [&sig](BasisBlade y, BasisBlade x) -> BladeProduct {
    if ((x.mask() & y.mask()) != x.mask()) return {};
    return blade_product(y, x, sig);
  });
}

Multivector grade_projection(const Multivector& a, int k) {
  return map_by_grade(a, [k](int grade) { return grade == k ? 1 : 0; });
}

Multivector parity(const Multivector& a) {
  return map_by_grade(a, [](int grade) { return (grade & 1) ? -1 : 1; });
}

Multivector reversion(const Multivector& a) {
  return map_by_grade(a, [](int grade) { return ((grade / 2) & 1) ? -1 : 1; });
}

Rational extended_metric(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  Rational sum = 0;
  // Orthonormal blades are g-orthogonal; the Gram determinant of a blade with
  // itself is the product of its generator squares.
  for (const auto& [blade, ca] : a.terms()) {
    auto it = b.terms().find(blade);
    if (it == b.terms().end()) continue;
    int negatives = std::popcount(blade.mask() >> sig.p());
    if (negatives & 1) {
      sum -= ca * it->second;
    } else {
      sum += ca * it->second;
    }
  }
  return sum;
}

}  // namespace clifford
