// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "clifford/classification.hpp"
#include "clifford/parser.hpp"
#include "clifford/signature_change.hpp"
#include "clifford/verify.hpp"

using namespace clifford;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::size_t cells_up_to(int max_n, const std::function<std::size_t(int, int)>& per_signature) {
  std::size_t total = 0;
  for (int n = 0; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) total += per_signature(p, n - p);
  return total;
}

void require_suite(Outcome& o, const Report& r, std::size_t expected_cells) {
  o.require(r.passed(), r.suite + " has " + std::to_string(r.violations()) + " violations");
  o.require(r.cells.size() == expected_cells,
            r.suite + " ran " + std::to_string(r.cells.size()) + " cells, expected " + std::to_string(expected_cells));
  for (const auto& c : r.cells)
    if (!c.pass) o.notes << " [" << c.key << ": " << c.detail << "]";
  o.notes << " " << r.suite << " " << r.cells.size() << " cells, " << r.violations() << " violations;";
}

SuiteOptions exhaustive(int max_n) {
  SuiteOptions s;
  s.max_n = max_n;
  s.random_max_n = 0;
  return s;
}

Outcome criterion1() {
  Outcome o;
  require_suite(o, run_suite("clifford", exhaustive(6)), 28);
  return o;
}

Outcome criterion2() {
  Outcome o;
  require_suite(o, run_suite("evenpart", exhaustive(6)), 27);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::size_t expected = cells_up_to(6, [](int p, int q) { return std::size_t((p + 1) * (q + 1)); });
  auto cells = sweep_table4({.max_n = 6});
  require_suite(o, to_report(cells), expected);
  // Same sweep with random odd sets of the same counts.
  require_suite(o, verify_table4({.max_n = 6, .randomize_odd_sets = true, .seed = 4242}), expected);

  std::set<std::string> cl13, cl30;
  for (const auto& c : cells) {
    bool nontrivial = c.p0 != c.p || c.q0 != c.q;
    if (!nontrivial || !c.pass()) continue;
    if (c.p == 1 && c.q == 3) cl13.insert(to_string(c.predicted));
    if (c.p == 3 && c.q == 0) cl30.insert(to_string(c.predicted));
  }
  o.require(cl13 == std::set<std::string>{"M(2,C)", "H (+) H"}, "Cl(1,3) gradings give M(2,C) or H (+) H");
  o.require(cl30 == std::set<std::string>{"H", "M(2,R)", "C (+) C"}, "Cl(3,0) gradings give H, M(2,R) or C (+) C");
  o.notes << " Cl(1,3): {M(2,C), H (+) H}; Cl(3,0): {H, M(2,R), C (+) C};";
  return o;
}

Outcome criterion4() {
  Outcome o;
  SuiteOptions s = exhaustive(6);
  Report r = run_suite("periodicity", s);
  o.require(r.passed(), "fingerprints agree within each p0 - q0 mod 4 class");
  std::size_t shared = 0;
  for (const auto& c : r.cells)
    if (c.detail.rfind("1 cells", 0) != 0) ++shared;
  o.require(shared > 0, "some residue class holds more than one cell");
  o.notes << " " << r.cells.size() << " residue classes, " << shared << " with several cells, " << r.violations()
          << " violations;";
  return o;
}

Outcome criterion5() {
  Outcome o;
  require_suite(o, run_suite("dichotomy", exhaustive(6)), 28);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::size_t expected = cells_up_to(5, [](int p, int q) { return std::size_t{1} << (p + q); });
  require_suite(o, run_suite("sigchange", exhaustive(5)), expected);

  Signature sig(1, 3);
  auto usual = verify_clifford_map(Z2Grading::usual(sig));
  o.require(usual.passed() && usual.target == Signature(3, 1) &&
                usual.observed == expected_invariants(parse_algebra_class("M(4,R)")),
            "(1,3) -> (3,1) realizes M(4,R)");
  auto negatives = verify_clifford_map(Z2Grading::from_odd_indices(sig, std::vector<int>{2, 3, 4}));
  o.require(negatives.passed() && negatives.target == Signature(4, 0) &&
                negatives.observed == expected_invariants(parse_algebra_class("M(2,H)")),
            "(1,3) -> (4,0) realizes M(2,H)");
  o.notes << " (1,3)->(3,1) and (1,3)->(4,0) pass;";
  return o;
}

Outcome criterion7() {
  Outcome o;
  SuiteOptions s;
  s.max_n = 5;
  s.random_max_n = 8;
  s.random_trials = 1000;
  Report r = run_suite("veeform", s);
  const std::size_t exhaustive_cells = cells_up_to(5, [](int, int) { return std::size_t{1}; });
  const std::size_t random_cells = cells_up_to(8, [](int, int) { return std::size_t{1}; }) - 1;
  require_suite(o, r, exhaustive_cells + random_cells);
  o.notes << " " << random_cells * 1000 << " random pairs over n <= 8;";
  return o;
}

Outcome criterion8() {
  Outcome o;
  require_suite(o, run_suite("tilt", exhaustive(6)), 28);
  Signature sig(1, 3);
  std::ostringstream squares;
  for (int i = 1; i <= 4; ++i) {
    Multivector e = Multivector::basis_vector(sig, i);
    Multivector before = e * e, after = tilt_product(e, e);
    o.require(before == Multivector::scalar(sig, i == 1 ? 1 : -1), "Cl(1,3) generator squares");
    o.require(after == Multivector::scalar(sig, i == 1 ? -1 : 1), "tilted generator squares");
    squares << (i > 1 ? "," : "") << format_multivector(after);
  }
  o.notes << " Cl(1,3) tilted squares " << squares.str() << ";";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::size_t expected = cells_up_to(4, [](int p, int q) { return std::size_t{1} << (p + q); });
  Report r = run_suite("veeprime", exhaustive(4));
  require_suite(o, r, expected);

  bool usual_clean = true;
  std::optional<std::string> witness;
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      if (find_wedge_counterexample(Z2Grading::usual(sig))) usual_clean = false;
      for (BasisBlade::Mask m = 1; m + 1 < (1u << n); ++m) {
        Z2Grading gr(sig, BasisBlade::from_mask(m));
        auto w = find_wedge_counterexample(gr);
        if (w && !witness) {
          witness = to_string(sig) + " " + to_string(gr) + ": x=" + format_multivector(w->x) + ", y=" +
                    format_multivector(w->y) + ", x^y=" + format_multivector(w->wedge) + ", naive=" +
                    format_multivector(w->naive) + ", weighted=" + format_multivector(w->full);
        }
      }
    }
  }
  o.require(usual_clean, "no witness under the usual grading");
  o.require(witness.has_value(), "a mixed grading has a witness");
  if (witness) o.notes << " witness " << *witness << ";";
  for (const auto& c : r.cells) {
    if (c.key == "1,3:usual" || c.key == "2,0:odd{e1}") o.notes << " note " << c.key << ": " << c.detail << ";";
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  SuiteOptions s;
  s.max_n = 4;
  s.random_max_n = 8;
  s.random_trials = 1000;
  const std::size_t expected = cells_up_to(4, [](int, int) { return std::size_t{1}; }) +
                               cells_up_to(8, [](int, int) { return std::size_t{1}; }) - 1;
  require_suite(o, run_suite("core", s), expected);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"1 Clifford algebra classification, p+q <= 6", criterion1},
      {"2 usual even parts, p+q <= 6", criterion2},
      {"3 graded even subalgebras, p+q <= 6", criterion3},
      {"4 4-fold periodicity in p0-q0", criterion4},
      {"5 dimension dichotomy, n <= 6", criterion5},
      {"6 signature change Clifford map, p+q <= 5", criterion6},
      {"7 vector product identity, n <= 5 exhaustive / n <= 8 random", criterion7},
      {"8 tilt equals usual-grading product, n <= 6", criterion8},
      {"9 alternative product suite, n <= 4", criterion9},
      {"10 core property suite", criterion10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ":" << o.notes.str() << " (" << secs
              << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
