#include "clifford/signature_change.hpp"

#include <random>

#include "clifford/classification.hpp"
#include "clifford/errors.hpp"

namespace clifford {

namespace {

void require_vector(const Multivector& v, const char* what) {
  if (!v.is_vector()) throw NotAVector(std::string(what) + " must be a 1-vector");
}

void require_grading_signature(const Multivector& a, const Z2Grading& gr) {
  if (a.signature() != gr.signature()) {
    throw SignatureMismatch("multivector over " + to_string(a.signature()) + " but grading over " +
                            to_string(gr.signature()));
  }
}

// v vee b for a 1-vector v.
Multivector vector_vee(const Multivector& v, const Multivector& b, const Z2Grading& gr) {
  return wedge(v, b) + left_contraction(alpha(v, gr), b);
}

}  // namespace

Rational deformed_metric(const Multivector& u, const Multivector& v, const Z2Grading& gr) {
  require_vector(u, "first argument of g_alpha");
  require_vector(v, "second argument of g_alpha");
  require_same_signature(u, v);
  require_grading_signature(u, gr);
  return extended_metric(project_even(u, gr), project_even(v, gr)) -
         extended_metric(project_odd(u, gr), project_odd(v, gr));
}

Signature target_signature(const Z2Grading& gr) {
  GradingCounts c = gr.counts();
  return Signature(c.p0 + c.q1, c.q0 + c.p1);
}

Multivector vee_alpha(const Multivector& a, const Multivector& b, const Z2Grading& gr) {
  require_same_signature(a, b);
  require_grading_signature(a, gr);
  const Signature& sig = a.signature();
  Multivector out(sig);
  for (const auto& [blade, coeff] : a.terms()) {
    // e_i1 ... e_ik vee b = e_i1 vee (e_i2 vee (... (e_ik vee b))).
    Multivector acc = b;
    const auto indices = blade.indices();
    for (auto it = indices.rbegin(); it != indices.rend() && !acc.is_zero(); ++it) {
      acc = vector_vee(Multivector::basis_vector(sig, *it), acc, gr);
    }
    out += acc * coeff;
  }
  return out;
}

Multivector vee_alpha_from_clifford(const Multivector& v, const Multivector& a, const Z2Grading& gr) {
  require_vector(v, "left factor");
  require_same_signature(v, a);
  require_grading_signature(v, gr);
  return geometric_product(project_even(v, gr), a) + geometric_product(parity(a), project_odd(v, gr));
}

Multivector tilt_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Multivector a_even = (a + parity(a)) * make_rational(1, 2);
  const Multivector a_odd = a - a_even;
  const Multivector b_even = (b + parity(b)) * make_rational(1, 2);
  const Multivector b_odd = b - b_even;
  return geometric_product(b_even, a_even) + geometric_product(b_even, a_odd) + geometric_product(b_odd, a_even) -
         geometric_product(b_odd, a_odd);
}

Multivector vee_prime(const Multivector& a, const Multivector& b, const Z2Grading& gr) {
  require_same_signature(a, b);
  require_grading_signature(a, gr);
  const Multivector a_parts[2] = {project_even(a, gr), project_odd(a, gr)};
  const Multivector b_parts[2] = {project_even(b, gr), project_odd(b, gr)};
  Multivector out(a.signature());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Multivector term = geometric_product(b_parts[j], a_parts[i]);
      if (i * j == 1) {
        out -= term;
      } else {
        out += term;
      }
    }
  }
  return out;
}

Multivector wedge_from_vee_prime(const Multivector& x, const Multivector& y, const Z2Grading& gr) {
  require_vector(x, "x");
  require_vector(y, "y");
  const Multivector x_parts[2] = {project_even(x, gr), project_odd(x, gr)};
  const Multivector y_parts[2] = {project_even(y, gr), project_odd(y, gr)};
  Multivector out(x.signature());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Multivector term = vee_prime(y_parts[i], x_parts[j], gr) - vee_prime(x_parts[j], y_parts[i], gr);
      if (i * j == 1) term = -term;
      out += term;
    }
  }
  return out * make_rational(1, 2);
}

Multivector naive_wedge_from_vee_prime(const Multivector& x, const Multivector& y, const Z2Grading& gr) {
  require_vector(x, "x");
  require_vector(y, "y");
  return (vee_prime(x, y, gr) - vee_prime(y, x, gr)) * make_rational(1, 2);
}

std::optional<WedgeWitness> find_wedge_counterexample(const Z2Grading& gr, std::uint64_t seed, int random_trials) {
  const Signature& sig = gr.signature();
  auto probe = [&](const Multivector& x, const Multivector& y) -> std::optional<WedgeWitness> {
    Multivector w = wedge(x, y);
    Multivector naive = naive_wedge_from_vee_prime(x, y, gr);
    if (naive == w) return std::nullopt;
    return WedgeWitness{x, y, w, naive, wedge_from_vee_prime(x, y, gr)};
  };
  for (int i = 1; i <= sig.dimension(); ++i) {
    for (int j = 1; j <= sig.dimension(); ++j) {
      if (auto w = probe(Multivector::basis_vector(sig, i), Multivector::basis_vector(sig, j))) return w;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int t = 0; t < random_trials && sig.dimension() > 0; ++t) {
    Multivector x(sig), y(sig);
    for (int i = 1; i <= sig.dimension(); ++i) {
      x.add_term(BasisBlade::vector(i), coeff(rng));
      y.add_term(BasisBlade::vector(i), coeff(rng));
    }
    if (auto w = probe(x, y)) return w;
  }
  return std::nullopt;
}

std::string CliffordMapReport::detail() const {
  std::string out = "target " + to_string(target) + ": relations " +
                    std::to_string(relation_checks - relation_violations) + "/" + std::to_string(relation_checks) +
                    ", associativity " + std::to_string(associativity_checks - associativity_violations) + "/" +
                    std::to_string(associativity_checks);
  if (structure_checked) {
    out += ", fingerprint " + to_string(observed);
    if (observed != expected) out += " (expected " + to_string(expected) + ")";
  }
  return out;
}

CliffordMapReport verify_clifford_map(const Z2Grading& gr, const CliffordMapOptions& options) {
  const Signature& sig = gr.signature();
  const int n = sig.dimension();
  CliffordMapReport report;
  report.target = target_signature(gr);

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Multivector ei = Multivector::basis_vector(sig, i);
      const Multivector ej = Multivector::basis_vector(sig, j);
      Multivector lhs = vee_alpha(ei, ej, gr) + vee_alpha(ej, ei, gr);
      Multivector rhs = Multivector::scalar(sig, 2 * deformed_metric(ei, ej, gr));
      ++report.relation_checks;
      if (lhs != rhs) ++report.relation_violations;
    }
  }

  const auto blades = all_blades(sig);
  auto check_triple = [&](BasisBlade a, BasisBlade b, BasisBlade c) {
    const Multivector ma = Multivector::blade(sig, a);
    const Multivector mb = Multivector::blade(sig, b);
    const Multivector mc = Multivector::blade(sig, c);
    ++report.associativity_checks;
    if (vee_alpha(vee_alpha(ma, mb, gr), mc, gr) != vee_alpha(ma, vee_alpha(mb, mc, gr), gr)) {
      ++report.associativity_violations;
    }
  };
  if (n <= options.exhaustive_max_n) {
    for (BasisBlade a : blades)
      for (BasisBlade b : blades)
        for (BasisBlade c : blades) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
    for (int t = 0; t < options.random_triples; ++t) check_triple(blades[pick(rng)], blades[pick(rng)], blades[pick(rng)]);
  }

  if (options.check_structure) {
    const ProductFn product = [&gr](const Multivector& a, const Multivector& b) { return vee_alpha(a, b, gr); };
    report.observed = structural_invariants(regular_representation(sig, blades, product).constants);
    report.expected = expected_invariants(classify_clifford(report.target.p(), report.target.q()));
    report.structure_checked = true;
  }
  return report;
}

}  // namespace clifford
