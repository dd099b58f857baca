#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "clifford/errors.hpp"
#include "clifford/grading.hpp"
#include "clifford/parser.hpp"

using namespace clifford;
using nlohmann::json;

namespace {

Multivector mv(const char* text, Signature sig) { return parse_multivector(text, sig); }

Z2Grading odd(Signature sig, std::initializer_list<int> indices) {
  std::vector<int> v(indices);
  return Z2Grading::from_odd_indices(sig, v);
}

std::vector<std::string> names(const std::vector<BasisBlade>& blades) {
  std::vector<std::string> out;
  for (auto b : blades) out.push_back(to_string(b));
  return out;
}

}  // namespace

TEST(Grading, CountsAndLabels) {
  Signature sig(1, 3);
  EXPECT_EQ(odd(sig, {1, 3}).counts(), (GradingCounts{0, 2, 1, 1}));
  EXPECT_EQ(Z2Grading::trivial(sig).counts(), (GradingCounts{1, 3, 0, 0}));
  EXPECT_EQ(Z2Grading::usual(sig).counts(), (GradingCounts{0, 0, 1, 3}));
  EXPECT_EQ(to_string(Z2Grading::trivial(sig)), "trivial");
  EXPECT_EQ(to_string(Z2Grading::usual(sig)), "usual");
  EXPECT_EQ(to_string(odd(sig, {3, 1})), "odd{e1,e3}");
  EXPECT_THROW(odd(sig, {5}), IndexOutOfRange);
}

TEST(Grading, CanonicalOddSetUsesLastIndices) {
  Z2Grading gr = Z2Grading::canonical(Signature(3, 2), 1, 1);
  EXPECT_EQ(gr, odd(Signature(3, 2), {2, 3, 5}));
  EXPECT_EQ(gr.counts(), (GradingCounts{1, 1, 2, 1}));
  EXPECT_THROW(Z2Grading::canonical(Signature(3, 2), 4, 0), InvalidArgument);
}

TEST(Alpha, Examples) {
  Signature sig(2, 0);
  Multivector all = mv("1 + e1 - 3*e2 + e1^e2", sig);
  EXPECT_EQ(alpha(all, Z2Grading::trivial(sig)), all);
  EXPECT_EQ(alpha(mv("e1", sig), Z2Grading::usual(sig)), mv("-e1", sig));
  EXPECT_EQ(alpha(mv("e1^e2", sig), Z2Grading::usual(sig)), mv("e1^e2", sig));
  EXPECT_EQ(alpha(mv("e1^e2", sig), odd(sig, {1})), mv("-e1^e2", sig));
}

TEST(Alpha, AutomorphismOnAllGradingsUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    Signature sig(n / 2, n - n / 2);
    auto blades = all_blades(sig);
    for (BasisBlade::Mask m = 0; m < (1u << n); ++m) {
      Z2Grading gr(sig, BasisBlade::from_mask(m));
      for (BasisBlade x : blades) {
        Multivector a = Multivector::blade(sig, x);
        ASSERT_EQ(alpha(alpha(a, gr), gr), a);
        ASSERT_TRUE(alpha(a, gr).is_homogeneous(x.grade()));
        for (BasisBlade y : blades) {
          Multivector b = Multivector::blade(sig, y);
          ASSERT_EQ(alpha(a * b, gr), alpha(a, gr) * alpha(b, gr));
        }
      }
    }
  }
}

TEST(Projections, Examples) {
  for (int n = 0; n <= 4; ++n) {
    Signature sig(n, 0);
    for (BasisBlade::Mask m = 0; m < (1u << n); ++m) {
      Z2Grading gr(sig, BasisBlade::from_mask(m));
      EXPECT_EQ(project_even(Multivector::scalar(sig, 1), gr), Multivector::scalar(sig, 1));
    }
  }
  Signature s30(3, 0);
  Multivector a = mv("1 + e1 + e1^e2 - e2^e3 + e1^e2^e3", s30);
  Z2Grading usual = Z2Grading::usual(s30);
  EXPECT_EQ(project_even(a, usual), grade_projection(a, 0) + grade_projection(a, 2));
  Z2Grading g3 = odd(s30, {3});
  EXPECT_EQ(project_odd(mv("e1 + e3", s30), g3), mv("e3", s30));
  EXPECT_EQ(project_even(a, g3) + project_odd(a, g3), a);
  EXPECT_TRUE(project_odd(project_even(a, g3), g3).is_zero());
  EXPECT_EQ(project_even(project_even(a, g3), g3), project_even(a, g3));
}

TEST(EvenSubalgebra, Basis) {
  EXPECT_EQ(names(even_subalgebra_basis(odd(Signature(3, 0), {3}))),
            (std::vector<std::string>{"1", "e1", "e2", "e1^e2"}));
  EXPECT_EQ(names(even_subalgebra_basis(Z2Grading::usual(Signature(1, 2)))),
            (std::vector<std::string>{"1", "e1^e2", "e1^e3", "e2^e3"}));
  EXPECT_EQ(even_subalgebra_basis(Z2Grading::trivial(Signature(2, 2))).size(), 16u);
}

TEST(Dichotomy, Examples) {
  Signature sig(1, 3);
  auto d = dimension_dichotomy_check(Z2Grading::trivial(sig));
  EXPECT_EQ(d.kind, DimensionCase::Trivial);
  EXPECT_EQ(d.even_dimension, 16u);
  d = dimension_dichotomy_check(odd(sig, {1}));
  EXPECT_EQ(d.kind, DimensionCase::Half);
  EXPECT_EQ(d.even_dimension, 8u);
  d = dimension_dichotomy_check(Z2Grading::usual(Signature(3, 0)));
  EXPECT_EQ(d.kind, DimensionCase::Half);
  EXPECT_EQ(d.even_dimension, 4u);
}

TEST(Dichotomy, OddMultiplicationIsBijective) {
  for (int n = 1; n <= 5; ++n) {
    Signature sig(n - n / 3, n / 3);
    for (BasisBlade::Mask m = 1; m < (1u << n); ++m) {
      Z2Grading gr(sig, BasisBlade::from_mask(m));
      ASSERT_TRUE(odd_multiplication_is_bijective(gr)) << to_string(gr);
      ASSERT_EQ(dimension_dichotomy_check(gr).even_dimension, 1u << (n - 1));
    }
  }
}

TEST(Closure, Examples) {
  for (int n = 0; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) EXPECT_TRUE(grading_closure_check(Z2Grading::usual(Signature(p, n - p))).ok());
  }
  auto r = grading_closure_check(odd(Signature(2, 1), {1, 2}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.pairs_checked, 64u);
  EXPECT_TRUE(grading_closure_check(odd(Signature(1, 1), {2})).ok());
}

TEST(Involution, IdentityAndNegation) {
  Signature sig(1, 3);
  auto data = validate_involution({Matrix::identity(4)}, sig);
  EXPECT_EQ(data.counts, (GradingCounts{1, 3, 0, 0}));
  EXPECT_TRUE(data.normal_form.is_trivial());

  Matrix neg(4, 4);
  for (int i = 0; i < 4; ++i) neg(i, i) = -1;
  data = validate_involution({neg}, sig);
  EXPECT_EQ(data.counts, (GradingCounts{0, 0, 1, 3}));
  EXPECT_TRUE(data.normal_form.is_usual());
  EXPECT_TRUE(data.orthogonal);
}

TEST(Involution, SwapReflection) {
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  auto data = validate_involution({swap}, Signature(2, 0));
  EXPECT_EQ(data.counts, (GradingCounts{1, 0, 1, 0}));
  ASSERT_EQ(data.even_basis.cols(), 1u);
  ASSERT_EQ(data.odd_basis.cols(), 1u);
  // V0 = span(e1 + e2), V1 = span(e1 - e2)
  EXPECT_EQ(data.even_basis(0, 0), data.even_basis(1, 0));
  EXPECT_EQ(data.odd_basis(0, 0), -data.odd_basis(1, 0));
  EXPECT_TRUE(data.orthogonal);
}

TEST(Involution, HyperbolicBoost) {
  // alpha(e1) = e1, alpha(e2) = -e2 conjugated by a boost in (1,1) is still
  // an isometric involution; its eigenspaces keep the (1,0) / (0,1) split.
  Matrix m(2, 2);
  m(0, 0) = make_rational(5, 3);
  m(0, 1) = make_rational(-4, 3);
  m(1, 0) = make_rational(4, 3);
  m(1, 1) = make_rational(-5, 3);
  auto data = validate_involution({m}, Signature(1, 1));
  EXPECT_EQ(data.counts, (GradingCounts{1, 0, 0, 1}));
  EXPECT_EQ(data.normal_form.counts(), data.counts);
}

TEST(Involution, Rejections) {
  Matrix rot(2, 2);  // quarter turn: isometry, not an involution
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  EXPECT_THROW(validate_involution({rot}, Signature(2, 0)), NotInvolution);
  Matrix shear = Matrix::identity(2);  // involution that is not an isometry
  shear(0, 1) = 1;
  shear(1, 1) = -1;
  EXPECT_THROW(validate_involution({shear}, Signature(2, 0)), NotIsometry);
  EXPECT_THROW(validate_involution({Matrix::identity(3)}, Signature(2, 0)), InvalidArgument);
}

TEST(Involution, JsonInput) {
  json j = json::parse(R"([["0", "1"], [1, "0/5"]])");
  Involution inv = involution_from_json(j);
  EXPECT_EQ(validate_involution(inv, Signature(2, 0)).counts, (GradingCounts{1, 0, 1, 0}));
  EXPECT_THROW(involution_from_json(json::parse(R"([["0", "1"], ["1"]])")), InvalidArgument);
  EXPECT_THROW(involution_from_json(json::parse(R"({"a": 1})")), InvalidArgument);
  EXPECT_THROW(involution_from_json(json::parse(R"([["x", "1"], ["1", "0"]])")), InvalidArgument);

  auto path = std::filesystem::temp_directory_path() / "clifford_swap_involution.json";
  std::ofstream(path) << j.dump();
  EXPECT_EQ(load_involution(path).matrix, inv.matrix);
  std::filesystem::remove(path);
  EXPECT_THROW(load_involution("/nonexistent/involution.json"), InvalidArgument);
}
