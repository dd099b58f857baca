#pragma once

#include <map>
#include <string>

#include "clifford/rational.hpp"
#include "clifford/signature.hpp"

namespace clifford {

// Element of V^ over a fixed signature: a sparse map from basis blades to
// exact rational coefficients. Zero coefficients are never stored.
class Multivector {
 public:
  using Terms = std::map<BasisBlade, Rational>;

  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig) {}
  Multivector(Signature sig, Terms terms);

  static Multivector scalar(Signature sig, const Rational& value);
  static Multivector blade(Signature sig, BasisBlade blade, const Rational& coefficient = 1);
  static Multivector basis_vector(Signature sig, int index);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(BasisBlade blade) const;
  Rational scalar_part() const { return coefficient(BasisBlade{}); }

  // True when every stored term has the given grade (zero is homogeneous of
  // every grade).
  bool is_homogeneous(int grade) const;
  bool is_scalar() const { return is_homogeneous(0); }
  bool is_vector() const { return is_homogeneous(1); }

  // Adds coefficient * blade in place, dropping the term if it cancels.
  void add_term(BasisBlade blade, const Rational& coefficient);

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& factor);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Multivector& other) const;

  Signature sig_;
  Terms terms_;
};

// Throws SignatureMismatch unless both operands live over the same signature.
void require_same_signature(const Multivector& a, const Multivector& b);

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

Multivector wedge(const Multivector& a, const Multivector& b);

// a _| b, defined by g(a _| b, c) = g(b, reversion(a) ^ c).
Multivector left_contraction(const Multivector& a, const Multivector& b);
// b |_ a, defined by g(b |_ a, c) = g(b, c ^ reversion(a)).
Multivector right_contraction(const Multivector& b, const Multivector& a);

// Grade-k part; zero for k outside [0, n].
Multivector grade_projection(const Multivector& a, int k);

// Grade involution (-1)^k and reversion (-1)^{k(k-1)/2} on grade-k parts.
Multivector parity(const Multivector& a);
Multivector reversion(const Multivector& a);

// Determinant extension of g to V^: on simple k-vectors
// g(u1^..^uk, v1^..^vk) = det g(ui, vj), and 0 between different grades.
Rational extended_metric(const Multivector& a, const Multivector& b);

}  // namespace clifford
