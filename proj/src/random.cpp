#include "clifford/random.hpp"

namespace clifford {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

BasisBlade random_blade(const Signature& sig, std::mt19937_64& rng) {
  const BasisBlade::Mask limit = (BasisBlade::Mask{1} << sig.dimension()) - 1;
  std::uniform_int_distribution<BasisBlade::Mask> pick(0, limit);
  return BasisBlade::from_mask(pick(rng));
}

Multivector random_multivector(const Signature& sig, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  Multivector out(sig);
  for (int t = count(rng); t > 0; --t) out.add_term(random_blade(sig, rng), random_coefficient(rng));
  return out;
}

Multivector random_vector(const Signature& sig, std::mt19937_64& rng) {
  Multivector out(sig);
  std::bernoulli_distribution keep(0.7);
  for (int i = 1; i <= sig.dimension(); ++i) {
    if (keep(rng)) out.add_term(BasisBlade::vector(i), random_coefficient(rng));
  }
  return out;
}

}  // namespace clifford
