#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "clifford/errors.hpp"
#include "clifford/random.hpp"
#include "clifford/signature_change.hpp"
#include "oracles.hpp"

using namespace clifford;

namespace {

Multivector mv(const char* text, Signature sig) { return parse_multivector(text, sig); }

Z2Grading odd(Signature sig, std::initializer_list<int> indices) {
  std::vector<int> v(indices);
  return Z2Grading::from_odd_indices(sig, v);
}

std::vector<Z2Grading> every_grading(const Signature& sig) {
  std::vector<Z2Grading> out;
  for (BasisBlade::Mask m = 0; m < (1u << sig.dimension()); ++m) out.emplace_back(sig, BasisBlade::from_mask(m));
  return out;
}

}  // namespace

TEST(DeformedMetric, Examples) {
  Signature sig(1, 3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Multivector u = random_vector(sig, rng), v = random_vector(sig, rng);
    EXPECT_EQ(deformed_metric(u, v, Z2Grading::trivial(sig)), oracle::vector_metric(u, v));
    EXPECT_EQ(deformed_metric(u, v, Z2Grading::usual(sig)), -oracle::vector_metric(u, v));
  }
  Z2Grading g1 = odd(sig, {1});
  EXPECT_EQ(deformed_metric(mv("e1", sig), mv("e1", sig), g1), -1);
  EXPECT_EQ(deformed_metric(mv("e2", sig), mv("e2", sig), g1), -1);
  EXPECT_EQ(deformed_metric(mv("e1", sig), mv("e2", sig), g1), 0);
  EXPECT_THROW(deformed_metric(mv("e1^e2", sig), mv("e1", sig), g1), NotAVector);
}

TEST(TargetSignature, Examples) {
  Signature sig(1, 3);
  EXPECT_EQ(target_signature(Z2Grading::usual(sig)), Signature(3, 1));
  EXPECT_EQ(target_signature(odd(sig, {2, 3, 4})), Signature(4, 0));
  EXPECT_EQ(target_signature(Z2Grading::trivial(sig)), sig);
  EXPECT_EQ(target_signature(odd(Signature(3, 2), {1})), Signature(2, 3));
  EXPECT_EQ(target_signature(odd(Signature(3, 2), {5})), Signature(4, 1));
}

TEST(VeeAlpha, TrivialGradingIsGeometricProduct) {
  for (int n = 0; n <= 6; ++n) {
    Signature sig(n - n / 2, n / 2);
    auto gr = Z2Grading::trivial(sig);
    for (BasisBlade x : all_blades(sig)) {
      for (BasisBlade y : all_blades(sig)) {
        Multivector a = Multivector::blade(sig, x), b = Multivector::blade(sig, y);
        ASSERT_EQ(vee_alpha(a, b, gr), a * b);
      }
    }
  }
}

TEST(VeeAlpha, GeneratorSquares) {
  Signature sig(2, 2);
  Z2Grading usual = Z2Grading::usual(sig);
  Multivector e1 = mv("e1", sig);
  EXPECT_EQ(vee_alpha(e1, e1, usual), -(e1 * e1));
  // odd {k} with e_k^2 = +1 moves one generator from p to q
  Z2Grading g1 = odd(sig, {1});
  EXPECT_EQ(target_signature(g1), Signature(1, 3));
  EXPECT_EQ(vee_alpha(e1, e1, g1), Multivector::scalar(sig, -1));
  EXPECT_EQ(vee_alpha(mv("e2", sig), mv("e2", sig), g1), Multivector::scalar(sig, 1));
}

TEST(VeeAlpha, MatchesDeformedBladeProductOracle) {
  // Third route: blades multiply like orthonormal generators whose squares
  // are flipped on the odd set.
  for (int n = 0; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      for (const auto& gr : every_grading(sig)) {
        auto squares = oracle::deformed_squares(sig, gr.odd_set());
        for (BasisBlade x : all_blades(sig)) {
          for (BasisBlade y : all_blades(sig)) {
            Multivector a = Multivector::blade(sig, x), b = Multivector::blade(sig, y);
            ASSERT_EQ(vee_alpha(a, b, gr), oracle::geometric(a, b, squares)) << to_string(gr);
          }
        }
      }
    }
  }
}

TEST(VeeAlpha, CliffordFormExamples) {
  Signature sig(1, 3);
  Z2Grading gr = odd(sig, {1, 2});
  Multivector a = mv("2 + e1^e3 - e2^e3^e4", sig);
  // v in V0
  EXPECT_EQ(vee_alpha_from_clifford(mv("e3", sig), a, gr), mv("e3", sig) * a);
  // v in V1, a a k-blade
  Multivector blade = mv("e2^e3^e4", sig);
  EXPECT_EQ(vee_alpha_from_clifford(mv("e1", sig), blade, gr), -(blade * mv("e1", sig)));
  EXPECT_THROW(vee_alpha_from_clifford(mv("1", sig), a, gr), NotAVector);
}

TEST(VeeAlpha, CliffordFormMatchesOnRandomInputs) {
  Signature sig(1, 3);
  Z2Grading gr = odd(sig, {1, 2});
  std::mt19937_64 rng(77);
  for (int t = 0; t < 1000; ++t) {
    Multivector v = random_vector(sig, rng), a = random_multivector(sig, rng);
    ASSERT_EQ(vee_alpha(v, a, gr), vee_alpha_from_clifford(v, a, gr));
  }
}

TEST(VeeAlpha, RelationsAndAlphaAutomorphism) {
  for (int n = 1; n <= 6; ++n) {
    Signature sig(n / 2, n - n / 2);
    for (const auto& gr : every_grading(sig)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          Multivector ei = Multivector::basis_vector(sig, i), ej = Multivector::basis_vector(sig, j);
          ASSERT_EQ(vee_alpha(ei, ej, gr) + vee_alpha(ej, ei, gr), Multivector::scalar(sig, 2 * deformed_metric(ei, ej, gr)));
        }
      }
    }
  }
  std::mt19937_64 rng(5);
  Signature sig(3, 3);
  for (int t = 0; t < 200; ++t) {
    Z2Grading gr(sig, BasisBlade::from_mask(rng() % 64));
    Multivector a = random_multivector(sig, rng), b = random_multivector(sig, rng);
    ASSERT_EQ(alpha(vee_alpha(a, b, gr), gr), vee_alpha(alpha(a, gr), alpha(b, gr), gr));
  }
}

TEST(VeeAlpha, RandomAssociativityUpToEight) {
  std::mt19937_64 rng(8);
  for (const Signature& sig : {Signature(5, 3), Signature(2, 6), Signature(8, 0)}) {
    for (int t = 0; t < 350; ++t) {
      Z2Grading gr(sig, BasisBlade::from_mask(rng() % 256));
      Multivector a = random_multivector(sig, rng, 4), b = random_multivector(sig, rng, 4), c = random_multivector(sig, rng, 4);
      ASSERT_EQ(vee_alpha(vee_alpha(a, b, gr), c, gr), vee_alpha(a, vee_alpha(b, c, gr), gr));
      ASSERT_EQ(vee_prime(vee_prime(a, b, gr), c, gr), vee_prime(a, vee_prime(b, c, gr), gr));
    }
  }
}

TEST(Tilt, Examples) {
  Signature sig(1, 3);
  Multivector a = mv("1 + e1^e2", sig), b = mv("3 - e2^e4", sig);
  EXPECT_EQ(tilt_product(a, b), b * a);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Multivector x = random_vector(sig, rng), y = random_vector(sig, rng);
    EXPECT_EQ(tilt_product(x, y), -(y * x));
    EXPECT_EQ(tilt_product(x, x), Multivector::scalar(sig, -oracle::vector_metric(x, x)));
  }
  Signature s22(2, 2);
  for (int t = 0; t < 200; ++t) {
    Multivector x = random_multivector(s22, rng), y = random_multivector(s22, rng);
    ASSERT_EQ(tilt_product(x, y), vee_alpha(x, y, Z2Grading::usual(s22)));
  }
}

TEST(VeePrime, Examples) {
  Signature sig(2, 2);
  Z2Grading gr = odd(sig, {1, 3});
  Multivector x = mv("e1 - 2*e3", sig), y = mv("3*e3 + e1", sig);
  EXPECT_EQ(vee_prime(x, y, gr), -(y * x));
  Multivector a = mv("2 + e2 + e1^e3", sig), b = mv("1 + e1 + e2^e3 - e4", sig);
  EXPECT_EQ(vee_prime(a, b, gr), b * a);
  Z2Grading usual = Z2Grading::usual(sig);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Multivector u = random_vector(sig, rng), v = random_vector(sig, rng);
    EXPECT_EQ(naive_wedge_from_vee_prime(u, v, usual), wedge(u, v));
  }
}

TEST(VeePrime, GradingClosureAndWedgeIdentity) {
  for (int n = 0; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      for (const auto& gr : every_grading(sig)) {
        for (BasisBlade x : all_blades(sig)) {
          for (BasisBlade y : all_blades(sig)) {
            Multivector ab = vee_prime(Multivector::blade(sig, x), Multivector::blade(sig, y), gr);
            bool odd_result = ((gr.parity_of(x) + gr.parity_of(y)) & 1) != 0;
            ASSERT_EQ(odd_result ? project_odd(ab, gr) : project_even(ab, gr), ab);
          }
        }
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            Multivector u = Multivector::basis_vector(sig, i), v = Multivector::basis_vector(sig, j);
            ASSERT_EQ(wedge_from_vee_prime(u, v, gr), wedge(u, v));
          }
      }
    }
  }
}

TEST(WedgeCounterexample, Search) {
  EXPECT_FALSE(find_wedge_counterexample(Z2Grading::usual(Signature(1, 3))));
  auto w = find_wedge_counterexample(odd(Signature(2, 0), {1}));
  ASSERT_TRUE(w);
  Signature sig(2, 0);
  EXPECT_EQ(w->x, mv("e1", sig));
  EXPECT_EQ(w->y, mv("e2", sig));
  EXPECT_EQ(w->wedge, mv("e1^e2", sig));
  EXPECT_EQ(w->naive, mv("-e1^e2", sig));
  EXPECT_EQ(w->full, w->wedge);
  // every mixed-parity grading has a witness
  for (int n = 2; n <= 4; ++n) {
    Signature s(n, 0);
    for (const auto& gr : every_grading(s)) {
      if (gr.is_trivial() || gr.is_usual()) continue;
      EXPECT_TRUE(find_wedge_counterexample(gr)) << to_string(gr);
    }
  }
}

TEST(CliffordMap, NamedSignatureChanges) {
  Signature sig(1, 3);
  auto r = verify_clifford_map(Z2Grading::usual(sig));
  EXPECT_TRUE(r.passed()) << r.detail();
  EXPECT_EQ(r.target, Signature(3, 1));
  EXPECT_EQ(r.observed, expected_invariants(parse_algebra_class("M(4,R)")));

  r = verify_clifford_map(odd(sig, {2, 3, 4}));
  EXPECT_TRUE(r.passed()) << r.detail();
  EXPECT_EQ(r.target, Signature(4, 0));
  EXPECT_EQ(r.observed, expected_invariants(parse_algebra_class("M(2,H)")));

  r = verify_clifford_map(Z2Grading::trivial(sig));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.observed, expected_invariants(classify_clifford(1, 3)));
  EXPECT_EQ(r.relation_checks, 16u);
  EXPECT_EQ(r.associativity_checks, 4096u);
}

TEST(CliffordMap, SampledBeyondFour) {
  auto r = verify_clifford_map(odd(Signature(3, 3), {1, 4, 5}), {.seed = 3, .random_triples = 300, .check_structure = false});
  EXPECT_TRUE(r.passed()) << r.detail();
  EXPECT_EQ(r.associativity_checks, 300u);
  EXPECT_FALSE(r.structure_checked);
  EXPECT_EQ(r.target, Signature(4, 2));  // p0 = 2, q0 = 1, p1 = 1, q1 = 2
}
