#include "clifford/classification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "clifford/detail/parallel.hpp"
#include "clifford/errors.hpp"

namespace clifford {

namespace {

int mod(int value, int m) { return ((value % m) + m) % m; }

AlgebraClass ring_sum(std::initializer_list<DivisionRing> rings) {
  std::vector<SimpleComponent> comps;
  for (DivisionRing k : rings) comps.push_back({1, k});
  return AlgebraClass(std::move(comps));
}

// M(m,R) (x) part with total real dimension 2^exponent.
AlgebraClass fill_to_dimension(const AlgebraClass& part, int exponent) {
  const long long total = 1LL << exponent;
  const long long d = part.real_dimension();
  if (total % d != 0) throw Error("division part does not divide 2^" + std::to_string(exponent));
  long long square = total / d;
  long long m = std::llround(std::sqrt(static_cast<double>(square)));
  while (m * m > square) --m;
  while ((m + 1) * (m + 1) <= square) ++m;
  if (m * m != square) throw Error("2^" + std::to_string(exponent) + " / dim is not a perfect square");
  return part.with_matrix_size(static_cast<int>(m));
}

void check_signature(int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("signature counts must be non-negative");
}

}  // namespace

AlgebraClass clifford_division_part(int p_minus_q) {
  using enum DivisionRing;
  switch (mod(p_minus_q, 8)) {
    case 0: return ring_sum({Real});
    case 1: return ring_sum({Real, Real});
    case 2: return ring_sum({Real});
    case 3: return ring_sum({Complex});
    case 4: return ring_sum({Quaternion});
    case 5: return ring_sum({Quaternion, Quaternion});
    case 6: return ring_sum({Quaternion});
    default: return ring_sum({Complex});
  }
}

AlgebraClass even_part_division_part(int p_minus_q) {
  using enum DivisionRing;
  switch (mod(p_minus_q, 8)) {
    case 0: return ring_sum({Real, Real});
    case 1: return ring_sum({Real});
    case 2: return ring_sum({Complex});
    case 3: return ring_sum({Quaternion});
    case 4: return ring_sum({Quaternion, Quaternion});
    case 5: return ring_sum({Quaternion});
    case 6: return ring_sum({Complex});
    default: return ring_sum({Real});
  }
}

AlgebraClass graded_even_division_part(int p_minus_q, int p0_minus_q0) {
  using enum DivisionRing;
  static const std::vector<std::vector<std::vector<DivisionRing>>> table = {
      {{Real, Real}, {Real}, {Complex}, {Quaternion}, {Quaternion, Quaternion}, {Quaternion}, {Complex}, {Real}},
      {{Real, Real},
       {Real, Real, Real, Real},
       {Real, Real},
       {Complex, Complex},
       {Quaternion, Quaternion},
       {Quaternion, Quaternion, Quaternion, Quaternion},
       {Quaternion, Quaternion},
       {Complex, Complex}},
      {{Complex}, {Real}, {Real, Real}, {Real}, {Complex}, {Quaternion}, {Quaternion, Quaternion}, {Quaternion}},
      {{Complex},
       {Complex, Complex},
       {Complex},
       {Complex, Complex},
       {Complex},
       {Complex, Complex},
       {Complex},
       {Complex, Complex}},
  };
  const auto& rings = table[mod(p0_minus_q0, 4)][mod(p_minus_q, 8)];
  std::vector<SimpleComponent> comps;
  for (DivisionRing k : rings) comps.push_back({1, k});
  return AlgebraClass(std::move(comps));
}

AlgebraClass classify_clifford(int p, int q) {
  check_signature(p, q);
  return fill_to_dimension(clifford_division_part(p - q), p + q);
}

AlgebraClass classify_even_part(int p, int q) {
  check_signature(p, q);
  if (p + q < 1) throw InvalidArgument("the usual even part needs p + q >= 1");
  return fill_to_dimension(even_part_division_part(p - q), p + q - 1);
}

AlgebraClass classify_complex(int n) {
  if (n < 0) throw InvalidArgument("dimension must be non-negative");
  const int size = 1 << (n / 2);
  if (n % 2 == 0) return AlgebraClass::simple(size, DivisionRing::Complex);
  return AlgebraClass({{size, DivisionRing::Complex}, {size, DivisionRing::Complex}});
}

AlgebraClass classify_even_subalgebra(int p, int q, int p0, int q0) {
  check_signature(p, q);
  if (p0 < 0 || p0 > p || q0 < 0 || q0 > q) {
    throw InvalidArgument("(p0,q0) = (" + std::to_string(p0) + "," + std::to_string(q0) + ") out of range for (" +
                          std::to_string(p) + "," + std::to_string(q) + ")");
  }
  const int p1 = p - p0;
  const int q1 = q - q0;
  // The even part of Cl(0,0) = R is R itself.
  const AlgebraClass odd_factor =
      (p1 + q1 == 0) ? AlgebraClass::simple(1, DivisionRing::Real) : classify_even_part(p1, q1);
  return tensor_simplify(classify_clifford(p0, q0), odd_factor);
}

AlgebraClass even_subalgebra_table_lookup(int p, int q, int p0, int q0) {
  check_signature(p, q);
  if (p0 < 0 || p0 > p || q0 < 0 || q0 > q) throw InvalidArgument("(p0,q0) out of range");
  if (p0 == p && q0 == q) throw InvalidArgument("the lookup table covers nontrivial gradings only");
  return fill_to_dimension(graded_even_division_part(p - q, p0 - q0), p + q - 1);
}

std::vector<Table4Cell> sweep_table4(const Table4Options& options) {
  if (options.max_n < 0 || options.max_n > kMaxDimension) throw InvalidArgument("max_n outside the supported range");
  struct Key {
    int p, q, p0, q0;
  };
  std::vector<Key> keys;
  for (int n = 0; n <= options.max_n; ++n)
    for (int p = n; p >= 0; --p)
      for (int p0 = 0; p0 <= p; ++p0)
        for (int q0 = 0; q0 <= n - p; ++q0) keys.push_back({p, n - p, p0, q0});

  std::vector<Table4Cell> cells(keys.size(), Table4Cell{.grading = Z2Grading::trivial(Signature())});
  const ProductFn product = [](const Multivector& a, const Multivector& b) { return geometric_product(a, b); };
  detail::parallel_for(keys.size(), options.threads, [&](std::size_t idx) {
    const Key& k = keys[idx];
    const auto start = std::chrono::steady_clock::now();
    const Signature sig(k.p, k.q);
    Z2Grading gr = Z2Grading::canonical(sig, k.p0, k.q0);
    if (options.randomize_odd_sets) {
      std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
      std::vector<int> positive(k.p), negative(k.q);
      std::iota(positive.begin(), positive.end(), 1);
      std::iota(negative.begin(), negative.end(), k.p + 1);
      std::shuffle(positive.begin(), positive.end(), rng);
      std::shuffle(negative.begin(), negative.end(), rng);
      std::vector<int> odd(positive.begin(), positive.begin() + (k.p - k.p0));
      odd.insert(odd.end(), negative.begin(), negative.begin() + (k.q - k.q0));
      gr = Z2Grading::from_odd_indices(sig, odd);
    }
    Table4Cell cell{.p = k.p, .q = k.q, .p0 = k.p0, .q0 = k.q0, .grading = gr};
    cell.predicted = classify_even_subalgebra(k.p, k.q, k.p0, k.q0);
    cell.table_agrees = gr.is_trivial() ? cell.predicted == classify_clifford(k.p, k.q)
                                        : cell.predicted == even_subalgebra_table_lookup(k.p, k.q, k.p0, k.q0);
    const auto basis = even_subalgebra_basis(gr);
    cell.observed = structural_invariants(regular_representation(sig, basis, product).constants);
    cell.expected = expected_invariants(cell.predicted);
    cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    cells[idx] = std::move(cell);
  });
  return cells;
}

Report to_report(const std::vector<Table4Cell>& cells) {
  Report report{"table4", {}};
  for (const auto& c : cells) {
    std::string detail = "grading " + to_string(c.grading) + ": Cl0 = " + to_string(c.predicted) + "; oracle " +
                         to_string(c.observed);
    if (!c.table_agrees) detail += "; closed form disagrees with the lookup table";
    if (c.observed != c.expected) detail += "; expected " + to_string(c.expected);
    report.cells.push_back({std::to_string(c.p) + "," + std::to_string(c.q) + "," + std::to_string(c.p0) + "," +
                                std::to_string(c.q0),
                            c.pass(), detail, c.millis});
  }
  return report;
}

Report verify_table4(const Table4Options& options) { return to_report(sweep_table4(options)); }

}  // namespace clifford
