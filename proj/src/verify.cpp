#include "clifford/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "clifford/classification.hpp"
#include "clifford/detail/parallel.hpp"
#include "clifford/errors.hpp"
#include "clifford/parser.hpp"
#include "clifford/random.hpp"
#include "clifford/signature_change.hpp"

namespace clifford {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Signature> signatures_up_to(int max_n, int min_n = 0) {
  std::vector<Signature> out;
  for (int n = min_n; n <= max_n; ++n)
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

std::vector<Z2Grading> all_gradings(const Signature& sig) {
  std::vector<Z2Grading> out;
  for (BasisBlade::Mask m = 0; m < (BasisBlade::Mask{1} << sig.dimension()); ++m) {
    out.emplace_back(sig, BasisBlade::from_mask(m));
  }
  return out;
}

std::string key_of(const Signature& sig) { return std::to_string(sig.p()) + "," + std::to_string(sig.q()); }
std::string key_of(const Z2Grading& gr) { return key_of(gr.signature()) + ":" + to_string(gr); }

// Accumulates named check failures for one cell.
class CellCheck {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string out = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
    for (const auto& f : failures_) out += "; FAIL " + f;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

// Evaluates one cell per job, in parallel, keeping job order in the report.
Report run_cells(const std::string& suite, const std::vector<std::pair<std::string, std::function<ReportCell()>>>& jobs,
                 unsigned threads) {
  Report report{suite, std::vector<ReportCell>(jobs.size())};
  detail::parallel_for(jobs.size(), threads, [&](std::size_t i) {
    auto start = Clock::now();
    ReportCell cell;
    try {
      cell = jobs[i].second();
    } catch (const std::exception& e) {
      cell.pass = false;
      cell.detail = std::string("exception: ") + e.what();
    }
    cell.key = jobs[i].first;
    cell.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report.cells[i] = std::move(cell);
  });
  return report;
}

ReportCell from_check(const CellCheck& check, std::string extra = {}) {
  std::string detail = check.summary();
  if (!extra.empty()) detail = extra + "; " + detail;
  return {"", check.ok(), detail, 0.0};
}

const ProductFn kGeometric = [](const Multivector& a, const Multivector& b) { return geometric_product(a, b); };

Report clifford_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      AlgebraClass cls = classify_clifford(sig.p(), sig.q());
      auto observed = structural_invariants(regular_representation(sig, all_blades(sig), kGeometric).constants);
      auto expected = expected_invariants(cls);
      std::string detail = "Cl" + to_string(sig) + " = " + to_string(cls) + "; oracle " + to_string(observed);
      if (observed != expected) detail += "; expected " + to_string(expected);
      return ReportCell{"", observed == expected, detail, 0.0};
    });
  }
  return run_cells("clifford", jobs, o.threads);
}

Report evenpart_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n, 1)) {
    jobs.emplace_back(key_of(sig), [sig] {
      const int p = sig.p(), q = sig.q();
      CellCheck check;
      AlgebraClass cls = classify_even_part(p, q);
      if (p >= 1) check.expect(cls == classify_clifford(q, p - 1), "Cl+(p,q) vs Cl(q,p-1)");
      if (q >= 1) check.expect(cls == classify_clifford(p, q - 1), "Cl+(p,q) vs Cl(p,q-1)");
      check.expect(cls == classify_even_part(q, p), "Cl+(p,q) vs Cl+(q,p)");
      auto gr = Z2Grading::usual(sig);
      auto observed =
          structural_invariants(regular_representation(sig, even_subalgebra_basis(gr), kGeometric).constants);
      auto expected = expected_invariants(cls);
      check.expect(observed == expected, "oracle " + to_string(observed) + " vs expected " + to_string(expected));
      return from_check(check, "Cl+" + to_string(sig) + " = " + to_string(cls));
    });
  }
  return run_cells("evenpart", jobs, o.threads);
}

Report table4_suite(const SuiteOptions& o) {
  return verify_table4({.max_n = o.max_n, .randomize_odd_sets = o.randomize_odd_sets, .seed = o.seed, .threads = o.threads});
}

Report periodicity_suite(const SuiteOptions& o) {
  auto cells = sweep_table4({.max_n = o.max_n, .randomize_odd_sets = o.randomize_odd_sets, .seed = o.seed, .threads = o.threads});
  // Nontrivial gradings grouped by (n, p-q mod 8, p0-q0 mod 4) must share one
  // oracle fingerprint.
  std::map<std::tuple<int, int, int>, std::vector<const Table4Cell*>> groups;
  for (const auto& c : cells) {
    if (c.p0 == c.p && c.q0 == c.q) continue;
    int n = c.p + c.q;
    groups[{n, ((c.p - c.q) % 8 + 8) % 8, ((c.p0 - c.q0) % 4 + 4) % 4}].push_back(&c);
  }
  Report report{"periodicity", {}};
  for (const auto& [key, members] : groups) {
    const auto& [n, d, d0] = key;
    bool same = true;
    for (const auto* m : members) same = same && m->observed == members.front()->observed && m->pass();
    report.cells.push_back({"n=" + std::to_string(n) + ",p-q=" + std::to_string(d) + ",p0-q0=" + std::to_string(d0),
                            same,
                            std::to_string(members.size()) + " cells share " + to_string(members.front()->observed) +
                                (same ? "" : " (mismatch)"),
                            0.0});
  }
  return report;
}

Report dichotomy_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      CellCheck check;
      const std::size_t full = std::size_t{1} << sig.dimension();
      for (const auto& gr : all_gradings(sig)) {
        DimensionCheck d = dimension_dichotomy_check(gr);
        if (gr.is_trivial()) {
          check.expect(d.kind == DimensionCase::Trivial && d.even_dimension == full, to_string(gr));
        } else {
          check.expect(d.kind == DimensionCase::Half && 2 * d.even_dimension == full, to_string(gr));
          check.expect(odd_multiplication_is_bijective(gr), "u*Cl0 = Cl1 for " + to_string(gr));
        }
      }
      return from_check(check, std::to_string(all_gradings(sig).size()) + " gradings");
    });
  }
  return run_cells("dichotomy", jobs, o.threads);
}

Report closure_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      CellCheck check;
      for (const auto& gr : all_gradings(sig)) {
        ClosureReport r = grading_closure_check(gr);
        check.expect(r.ok(), to_string(gr) + " has " + std::to_string(r.violations.size()) + " violations");
        // alpha is an automorphism with alpha^2 = id that preserves each grade.
        const auto blades = all_blades(sig);
        for (BasisBlade a : blades) {
          Multivector ma = Multivector::blade(sig, a);
          Multivector aa = alpha(ma, gr);
          check.expect(alpha(aa, gr) == ma, "alpha^2 on " + to_string(a));
          check.expect(aa.is_homogeneous(a.grade()), "alpha preserves grade of " + to_string(a));
          for (BasisBlade b : blades) {
            Multivector mb = Multivector::blade(sig, b);
            check.expect(alpha(ma * mb, gr) == alpha(ma, gr) * alpha(mb, gr), "alpha(ab) for " + to_string(gr));
          }
        }
        check.expect(project_even(Multivector::scalar(sig, 1), gr) == Multivector::scalar(sig, 1), "pi0(1) = 1");
      }
      return from_check(check);
    });
  }
  return run_cells("closure", jobs, o.threads);
}

void core_exhaustive(const Signature& sig, CellCheck& check) {
  const int n = sig.dimension();
  const auto blades = all_blades(sig);
  auto mv = [&](BasisBlade b) { return Multivector::blade(sig, b); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Multivector ei = Multivector::basis_vector(sig, i), ej = Multivector::basis_vector(sig, j);
      Multivector expected = Multivector::scalar(sig, i == j ? 2 * sig.square(i) : 0);
      check.expect(ei * ej + ej * ei == expected, "generator relation e" + std::to_string(i) + ",e" + std::to_string(j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    Multivector v = Multivector::basis_vector(sig, i);
    for (BasisBlade a : blades) {
      check.expect(v * mv(a) == wedge(v, mv(a)) + left_contraction(v, mv(a)), "va = v^a + v_|a");
    }
  }
  if (n > 4) return;
  for (BasisBlade a : blades) {
    for (BasisBlade b : blades) {
      Multivector ab = mv(a) * mv(b);
      check.expect(reversion(ab) == reversion(mv(b)) * reversion(mv(a)), "reversion anti-automorphism");
      check.expect(parity(ab) == parity(mv(a)) * parity(mv(b)), "parity automorphism");
      int lo = std::abs(a.grade() - b.grade());
      for (const auto& [blade, c] : ab.terms()) {
        int g = blade.grade();
        check.expect(g >= lo && g <= a.grade() + b.grade() && (g - lo) % 2 == 0, "grade bookkeeping");
      }
      for (BasisBlade c : blades) {
        check.expect((ab * mv(c)) == mv(a) * (mv(b) * mv(c)), "associativity");
        check.expect(extended_metric(left_contraction(mv(a), mv(b)), mv(c)) ==
                         extended_metric(mv(b), wedge(reversion(mv(a)), mv(c))),
                     "left contraction adjointness");
        check.expect(extended_metric(right_contraction(mv(b), mv(a)), mv(c)) ==
                         extended_metric(mv(b), wedge(mv(c), reversion(mv(a)))),
                     "right contraction adjointness");
      }
    }
    check.expect(parity(parity(mv(a))) == mv(a) && reversion(reversion(mv(a))) == mv(a), "involutions square to id");
  }
}

void core_random(const Signature& sig, int trials, std::mt19937_64& rng, CellCheck& check) {
  for (int i = 1; i <= sig.dimension(); ++i) {
    for (int j = 1; j <= sig.dimension(); ++j) {
      Multivector ei = Multivector::basis_vector(sig, i), ej = Multivector::basis_vector(sig, j);
      check.expect(ei * ej + ej * ei == Multivector::scalar(sig, i == j ? 2 * sig.square(i) : 0), "generator relation");
    }
  }
  for (int t = 0; t < trials; ++t) {
    Multivector a = random_multivector(sig, rng), b = random_multivector(sig, rng), c = random_multivector(sig, rng);
    Multivector v = random_vector(sig, rng);
    Multivector ab = a * b;
    check.expect(ab * c == a * (b * c), "associativity");
    check.expect(reversion(ab) == reversion(b) * reversion(a), "reversion anti-automorphism");
    check.expect(parity(ab) == parity(a) * parity(b), "parity automorphism");
    check.expect(parity(parity(a)) == a && reversion(reversion(a)) == a, "involutions square to id");
    check.expect(v * a == wedge(v, a) + left_contraction(v, a), "va = v^a + v_|a");
    check.expect(extended_metric(left_contraction(a, b), c) == extended_metric(b, wedge(reversion(a), c)),
                 "left contraction adjointness");
    check.expect(extended_metric(right_contraction(b, a), c) == extended_metric(b, wedge(c, reversion(a))),
                 "right contraction adjointness");
  }
}

Report core_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      CellCheck check;
      core_exhaustive(sig, check);
      return from_check(check, "exhaustive");
    });
  }
  for (const Signature& sig : signatures_up_to(o.random_max_n, 1)) {
    jobs.emplace_back("random " + key_of(sig), [sig, o] {
      CellCheck check;
      std::mt19937_64 rng(o.seed + 1000 * sig.p() + sig.q());
      core_random(sig, o.random_trials, rng, check);
      return from_check(check, "generator relations, " + std::to_string(o.random_trials) + " random triples");
    });
  }
  return run_cells("core", jobs, o.threads);
}

Report veeform_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      CellCheck check;
      const auto blades = all_blades(sig);
      std::size_t gradings = 0;
      for (const auto& gr : all_gradings(sig)) {
        ++gradings;
        for (int i = 1; i <= sig.dimension(); ++i) {
          Multivector v = Multivector::basis_vector(sig, i);
          for (BasisBlade a : blades) {
            Multivector ma = Multivector::blade(sig, a);
            check.expect(vee_alpha(v, ma, gr) == vee_alpha_from_clifford(v, ma, gr),
                         to_string(gr) + " e" + std::to_string(i) + " vee " + to_string(a));
          }
        }
      }
      return from_check(check, std::to_string(gradings) + " gradings, all (e_i, blade) pairs");
    });
  }
  for (const Signature& sig : signatures_up_to(o.random_max_n, 1)) {
    jobs.emplace_back("random " + key_of(sig), [sig, o] {
      CellCheck check;
      std::mt19937_64 rng(o.seed + 7919 * sig.p() + sig.q());
      const BasisBlade::Mask limit = (BasisBlade::Mask{1} << sig.dimension()) - 1;
      std::uniform_int_distribution<BasisBlade::Mask> pick(0, limit);
      for (int t = 0; t < o.random_trials; ++t) {
        Z2Grading gr(sig, BasisBlade::from_mask(pick(rng)));
        Multivector v = random_vector(sig, rng);
        Multivector a = random_multivector(sig, rng);
        check.expect(vee_alpha(v, a, gr) == vee_alpha_from_clifford(v, a, gr), "random pair under " + to_string(gr));
      }
      return from_check(check, std::to_string(o.random_trials) + " random pairs");
    });
  }
  return run_cells("veeform", jobs, o.threads);
}

Report tilt_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    jobs.emplace_back(key_of(sig), [sig] {
      CellCheck check;
      const auto gr = Z2Grading::usual(sig);
      const auto blades = all_blades(sig);
      for (BasisBlade a : blades) {
        for (BasisBlade b : blades) {
          Multivector ma = Multivector::blade(sig, a), mb = Multivector::blade(sig, b);
          check.expect(tilt_product(ma, mb) == vee_alpha(ma, mb, gr), to_string(a) + " tilt " + to_string(b));
        }
      }
      for (int i = 1; i <= sig.dimension(); ++i) {
        Multivector e = Multivector::basis_vector(sig, i);
        check.expect(tilt_product(e, e) == Multivector::scalar(sig, -sig.square(i)), "tilt flips e" + std::to_string(i) + "^2");
      }
      return from_check(check);
    });
  }
  return run_cells("tilt", jobs, o.threads);
}

Report veeprime_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(std::min(o.max_n, 4))) {
    for (const auto& gr : all_gradings(sig)) {
      jobs.emplace_back(key_of(gr), [gr, o] {
        const Signature& sig = gr.signature();
        CellCheck check;
        const auto blades = all_blades(sig);
        auto mv = [&](BasisBlade b) { return Multivector::blade(sig, b); };
        for (BasisBlade a : blades) {
          for (BasisBlade b : blades) {
            Multivector ab = vee_prime(mv(a), mv(b), gr);
            int expected = (gr.parity_of(a) + gr.parity_of(b)) & 1;
            check.expect((expected ? project_odd(ab, gr) : project_even(ab, gr)) == ab, "closure");
            for (BasisBlade c : blades) {
              check.expect(vee_prime(ab, mv(c), gr) == vee_prime(mv(a), vee_prime(mv(b), mv(c), gr), gr),
                           "associativity");
            }
          }
        }
        std::mt19937_64 rng(o.seed);
        for (int i = 1; i <= sig.dimension(); ++i) {
          for (int j = 1; j <= sig.dimension(); ++j) {
            Multivector x = Multivector::basis_vector(sig, i), y = Multivector::basis_vector(sig, j);
            check.expect(wedge_from_vee_prime(x, y, gr) == wedge(x, y), "weighted wedge identity");
          }
        }
        for (int t = 0; t < 50 && sig.dimension() > 0; ++t) {
          Multivector x = random_vector(sig, rng), y = random_vector(sig, rng);
          check.expect(wedge_from_vee_prime(x, y, gr) == wedge(x, y), "weighted wedge identity");
        }
        auto witness = find_wedge_counterexample(gr, o.seed);
        std::string extra = witness ? "naive antisymmetrization fails at x=" + format_multivector(witness->x) +
                                          ", y=" + format_multivector(witness->y) + ": x^y=" +
                                          format_multivector(witness->wedge) + ", naive=" +
                                          format_multivector(witness->naive)
                                    : "naive antisymmetrization holds";
        const ProductFn product = [&gr](const Multivector& a, const Multivector& b) { return vee_prime(a, b, gr); };
        auto fp = structural_invariants(regular_representation(sig, blades, product).constants);
        Signature target = target_signature(gr);
        bool like_target = fp == expected_invariants(classify_clifford(target.p(), target.q()));
        extra += "; vee' fingerprint " + to_string(fp) + (like_target ? " (matches Cl" : " (differs from Cl") +
                 to_string(target) + ")";
        return from_check(check, extra);
      });
    }
  }
  return run_cells("veeprime", jobs, o.threads);
}

Report sigchange_suite(const SuiteOptions& o) {
  std::vector<std::pair<std::string, std::function<ReportCell()>>> jobs;
  for (const Signature& sig : signatures_up_to(o.max_n)) {
    for (const auto& gr : all_gradings(sig)) {
      jobs.emplace_back(key_of(gr), [gr, o] {
        CliffordMapReport r = verify_clifford_map(gr, {.seed = o.seed});
        return ReportCell{"", r.passed(), r.detail(), 0.0};
      });
    }
  }
  return run_cells("sigchange", jobs, o.threads);
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"clifford", clifford_suite},   {"evenpart", evenpart_suite},   {"table4", table4_suite},
      {"periodicity", periodicity_suite}, {"dichotomy", dichotomy_suite}, {"closure", closure_suite},
      {"core", core_suite},           {"veeform", veeform_suite},             {"tilt", tilt_suite},
      {"veeprime", veeprime_suite},   {"sigchange", sigchange_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.max_n < 0 || options.max_n > kMaxVerifyDimension) {
    throw InvalidArgument("max-n must be between 0 and " + std::to_string(kMaxVerifyDimension));
  }
  if (options.random_max_n < 0 || options.random_max_n > kMaxVerifyDimension) {
    throw InvalidArgument("random max-n must be between 0 and " + std::to_string(kMaxVerifyDimension));
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(options);
  }
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

}  // namespace clifford
