#include "clifford/cli.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clifford/classification.hpp"
#include "clifford/errors.hpp"
#include "clifford/parser.hpp"
#include "clifford/signature_change.hpp"
#include "clifford/verify.hpp"

namespace clifford {

namespace {

using nlohmann::json;

// Thrown for bad flag values; mapped to kExitUsage.
struct UsageError : Error {
  using Error::Error;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<int, int> parse_pair(const std::string& text, std::string_view what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " must look like p,q");
  return {parse_int(std::string_view(text).substr(0, comma), what),
          parse_int(std::string_view(text).substr(comma + 1), what)};
}

Signature parse_signature(const std::string& text) {
  auto [p, q] = parse_pair(text, "--sig");
  if (p < 0 || q < 0 || p + q > kMaxDimension) {
    throw UsageError("--sig needs p, q >= 0 and p + q <= " + std::to_string(kMaxDimension));
  }
  return Signature(p, q);
}

// "e1,e3" or "1,3"; "" or "none" is the trivial grading, "all" the usual one.
Z2Grading parse_odd(const std::string& text, const Signature& sig) {
  if (text.empty() || text == "none" || text == "trivial") return Z2Grading::trivial(sig);
  if (text == "all" || text == "usual") return Z2Grading::usual(sig);
  std::vector<int> indices;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view item = std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty() && item.front() == 'e') item.remove_prefix(1);
    int index = parse_int(item, "--odd entry");
    if (!sig.contains(index)) throw UsageError("--odd index e" + std::to_string(index) + " is outside " + to_string(sig));
    indices.push_back(index);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return Z2Grading::from_odd_indices(sig, indices);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

json terms_json(const Multivector& a) {
  json terms = json::array();
  for (const auto& [blade, c] : a.terms()) terms.push_back({{"blade", to_string(blade)}, {"coefficient", to_string(c)}});
  return terms;
}

json signature_json(const Signature& sig) { return json::array({sig.p(), sig.q()}); }

json counts_json(const GradingCounts& c) {
  return {{"p0", c.p0}, {"q0", c.q0}, {"p1", c.p1}, {"q1", c.q1}};
}

struct Options {
  std::string sig;
  std::string odd;
  bool odd_given = false;
  std::string involution;
  bool json = false;
  // eval
  std::string product = "geometric";
  std::vector<std::string> exprs;
  // classify
  std::string even;
  bool oracle = false;
  // verify
  std::string suite = "all";
  int max_n = 4;
  std::uint64_t seed = 20021;
  unsigned threads = 1;
  bool random_odd = false;
};

Z2Grading grading_from(const Options& o, const Signature& sig, const Z2Grading& fallback) {
  return o.odd_given ? parse_odd(o.odd, sig) : fallback;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Signature sig = parse_signature(o.sig);
  const Z2Grading gr = grading_from(o, sig, Z2Grading::usual(sig));
  ProductFn product;
  if (o.product == "geometric") {
    product = [](const Multivector& a, const Multivector& b) { return geometric_product(a, b); };
  } else if (o.product == "wedge") {
    product = [](const Multivector& a, const Multivector& b) { return wedge(a, b); };
  } else if (o.product == "lcont") {
    product = [](const Multivector& a, const Multivector& b) { return left_contraction(a, b); };
  } else if (o.product == "vee") {
    product = [gr](const Multivector& a, const Multivector& b) { return vee_alpha(a, b, gr); };
  } else if (o.product == "veeprime") {
    product = [gr](const Multivector& a, const Multivector& b) { return vee_prime(a, b, gr); };
  } else if (o.product == "tilt") {
    product = [](const Multivector& a, const Multivector& b) { return tilt_product(a, b); };
  } else {
    throw UsageError("unknown --product '" + o.product + "'");
  }
  if (o.exprs.empty()) throw UsageError("eval needs at least one expression");

  std::optional<Multivector> result;
  for (const auto& text : o.exprs) {
    Multivector value = parse_multivector(text, sig, product);
    result = result ? product(*result, value) : value;
  }
  if (o.json) {
    json j = {{"signature", signature_json(sig)}, {"product", o.product}, {"result", format_multivector(*result)},
              {"terms", terms_json(*result)}};
    if (o.product == "vee" || o.product == "veeprime") j["grading"] = to_string(gr);
    out << j.dump(2) << '\n';
  } else {
    out << format_multivector(*result) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Signature sig = parse_signature(o.sig);
  const ProductFn geometric = [](const Multivector& a, const Multivector& b) { return geometric_product(a, b); };
  json j = {{"signature", signature_json(sig)}};
  std::vector<std::pair<std::string, std::string>> lines;
  bool agrees = true;

  auto check = [&](const std::string& label, const AlgebraClass& cls, std::span<const BasisBlade> blades) {
    auto observed = structural_invariants(regular_representation(sig, blades, geometric).constants);
    auto expected = expected_invariants(cls);
    bool ok = observed == expected;
    agrees = agrees && ok;
    j["oracle"][label] = {{"agrees", ok}, {"observed", to_json(observed)}, {"expected", to_json(expected)}};
    lines.emplace_back("oracle " + label, std::string(ok ? "agrees " : "DISAGREES ") + to_string(observed));
  };

  if (!o.even.empty() || o.odd_given) {
    if (!o.even.empty() && o.odd_given) throw UsageError("--even and --odd are exclusive");
    Z2Grading gr = Z2Grading::trivial(sig);
    if (o.odd_given) {
      gr = parse_odd(o.odd, sig);
    } else {
      auto [p0, q0] = parse_pair(o.even, "--even");
      if (p0 < 0 || q0 < 0 || p0 > sig.p() || q0 > sig.q()) {
        throw UsageError("--even needs 0 <= p0 <= p and 0 <= q0 <= q");
      }
      gr = Z2Grading::canonical(sig, p0, q0);
    }
    const GradingCounts c = gr.counts();
    AlgebraClass cls = classify_even_subalgebra(sig.p(), sig.q(), c.p0, c.q0);
    j["even"] = json::array({c.p0, c.q0});
    j["grading"] = to_string(gr);
    j["even_subalgebra"] = to_json(cls);
    lines.emplace_back("even subalgebra", to_string(cls));
    if (o.oracle) {
      auto basis = even_subalgebra_basis(gr);
      check("even_subalgebra", cls, basis);
    }
  } else {
    AlgebraClass cls = classify_clifford(sig.p(), sig.q());
    j["algebra"] = to_json(cls);
    lines.emplace_back("algebra", to_string(cls));
    std::optional<AlgebraClass> even;
    if (sig.dimension() >= 1) {
      even = classify_even_part(sig.p(), sig.q());
      j["even_part"] = to_json(*even);
      lines.emplace_back("even part", to_string(*even));
    }
    if (o.oracle) {
      auto blades = all_blades(sig);
      check("algebra", cls, blades);
      if (even) {
        auto basis = even_subalgebra_basis(Z2Grading::usual(sig));
        check("even_part", *even, basis);
      }
    }
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [label, value] : lines) out << label << ": " << value << '\n';
  }
  return agrees ? kExitOk : kExitViolation;
}

int cmd_grading(const Options& o, std::ostream& out) {
  const Signature sig = parse_signature(o.sig);
  json j = {{"signature", signature_json(sig)}};
  if (!o.involution.empty()) {
    if (o.odd_given) throw UsageError("--odd and --involution are exclusive");
    InvolutionData data = validate_involution(load_involution(o.involution), sig);
    j["counts"] = counts_json(data.counts);
    j["orthogonal"] = data.orthogonal;
    j["normal_form"] = to_string(data.normal_form);
    j["even_dimension"] = dimension_dichotomy_check(data.normal_form).even_dimension;
    if (o.json) {
      out << j.dump(2) << '\n';
    } else {
      const auto& c = data.counts;
      out << "V0: (" << c.p0 << "," << c.q0 << ")\nV1: (" << c.p1 << "," << c.q1 << ")\n"
          << "orthogonal: " << (data.orthogonal ? "yes" : "no") << '\n'
          << "normal form: " << to_string(data.normal_form) << '\n'
          << "even subalgebra dimension: " << j["even_dimension"].get<std::size_t>() << '\n';
    }
    return data.orthogonal ? kExitOk : kExitViolation;
  }
  if (!o.odd_given) throw UsageError("grading needs --odd or --involution");
  const Z2Grading gr = parse_odd(o.odd, sig);
  const GradingCounts c = gr.counts();
  DimensionCheck dim = dimension_dichotomy_check(gr);
  ClosureReport closure = grading_closure_check(gr);
  j["grading"] = to_string(gr);
  j["counts"] = counts_json(c);
  j["even_dimension"] = dim.even_dimension;
  j["closure"] = {{"pairs_checked", closure.pairs_checked}, {"violations", closure.violations.size()}};
  std::vector<std::string> even;
  for (BasisBlade b : even_subalgebra_basis(gr)) even.push_back(to_string(b));
  j["even_basis"] = even;
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "grading: " << to_string(gr) << '\n'
        << "V0: (" << c.p0 << "," << c.q0 << ")\nV1: (" << c.p1 << "," << c.q1 << ")\n"
        << "even subalgebra dimension: " << dim.even_dimension << '\n'
        << "closure: " << closure.pairs_checked << " pairs, " << closure.violations.size() << " violations\n";
  }
  return closure.ok() ? kExitOk : kExitViolation;
}

int cmd_sigchange(const Options& o, std::ostream& out) {
  const Signature sig = parse_signature(o.sig);
  json j = {{"signature", signature_json(sig)}};
  GradingCounts counts;
  std::optional<Z2Grading> gr;
  if (!o.involution.empty()) {
    if (o.odd_given) throw UsageError("--odd and --involution are exclusive");
    if (!o.exprs.empty()) throw UsageError("--expr needs a basis-aligned grading given with --odd");
    counts = validate_involution(load_involution(o.involution), sig).counts;
  } else {
    gr = grading_from(o, sig, Z2Grading::usual(sig));
    counts = gr->counts();
    j["grading"] = to_string(*gr);
  }
  const Signature target(counts.p0 + counts.q1, counts.q0 + counts.p1);
  j["counts"] = counts_json(counts);
  j["target"] = signature_json(target);
  j["target_algebra"] = to_json(classify_clifford(target.p(), target.q()));

  std::vector<std::pair<std::string, std::string>> evaluated;
  if (gr) {
    const ProductFn vee = [&](const Multivector& a, const Multivector& b) { return vee_alpha(a, b, *gr); };
    json results = json::array();
    for (const auto& text : o.exprs) {
      Multivector value = parse_multivector(text, sig, vee);
      evaluated.emplace_back(text, format_multivector(value));
      results.push_back({{"expr", text}, {"result", format_multivector(value)}, {"terms", terms_json(value)}});
    }
    if (!o.exprs.empty()) j["results"] = results;
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    if (gr) out << "grading: " << to_string(*gr) << '\n';
    out << "target: Cl" << to_string(target) << " = " << to_string(classify_clifford(target.p(), target.q())) << '\n';
    for (const auto& [text, value] : evaluated) out << text << " = " << value << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_n < 0 || o.max_n > kMaxVerifyDimension) {
    throw UsageError("--max-n must be between 0 and " + std::to_string(kMaxVerifyDimension));
  }
  SuiteOptions options;
  options.max_n = o.max_n;
  options.random_max_n = o.max_n;
  options.seed = o.seed;
  options.threads = o.threads == 0 ? 1 : o.threads;
  options.randomize_odd_sets = o.random_odd;

  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown --suite '" + o.suite + "'");
    suites = {o.suite};
  }
  std::size_t violations = 0;
  json reports = json::array();
  for (const auto& name : suites) {
    Report report = run_suite(name, options);
    violations += report.violations();
    if (o.json) {
      reports.push_back(to_json(report));
    } else {
      for (const auto& cell : report.cells) {
        out << (cell.pass ? "PASS " : "FAIL ") << report.suite << ' ' << cell.key << ": " << cell.detail << '\n';
      }
      out << report.suite << ": " << report.cells.size() << " cells, " << report.violations() << " violations\n";
    }
  }
  if (o.json) out << (reports.size() == 1 ? reports.front() : reports).dump(2) << '\n';
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford algebra toolkit", "clifford"};
  app.require_subcommand(1);
  Options o;

  auto add_sig = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--sig", o.sig, "Signature p,q");
    if (required) opt->required();
  };
  auto add_odd = [&](CLI::App* cmd) {
    cmd->add_option("--odd", o.odd, "Odd basis vectors, e.g. e1,e3; \"\" trivial, all = usual")
        ->each([&](const std::string&) { o.odd_given = true; });
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "JSON output"); };

  auto* eval = app.add_subcommand("eval", "Evaluate expressions, folding them left to right with the product");
  add_sig(eval, true);
  add_odd(eval);
  add_json(eval);
  eval->add_option("--product", o.product, "geometric, wedge, lcont, vee, veeprime or tilt");
  eval->add_option("expr", o.exprs, "Expressions")->required();

  auto* classify = app.add_subcommand("classify", "Classify Cl(p,q), its even part or a graded even subalgebra");
  add_sig(classify, true);
  add_odd(classify);
  add_json(classify);
  classify->add_option("--even", o.even, "Even vector counts p0,q0");
  classify->add_flag("--oracle", o.oracle, "Re-derive the class from the structural fingerprint");

  auto* grading = app.add_subcommand("grading", "Inspect a Z2-grading");
  add_sig(grading, true);
  add_odd(grading);
  add_json(grading);
  grading->add_option("--involution", o.involution, "JSON matrix of alpha on V");

  auto* sigchange = app.add_subcommand("sigchange", "Signature change induced by a grading");
  add_sig(sigchange, true);
  add_odd(sigchange);
  add_json(sigchange);
  sigchange->add_option("--involution", o.involution, "JSON matrix of alpha on V");
  sigchange->add_option("--expr", o.exprs, "Expression evaluated with the deformed product");

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  add_json(verify);
  verify->add_option("--suite", o.suite, "Suite name or all");
  verify->add_option("--max-n", o.max_n, "Largest p + q swept");
  verify->add_option("--seed", o.seed, "Seed for randomized cells");
  verify->add_option("--threads", o.threads, "Worker threads");
  verify->add_flag("--random-odd", o.random_odd, "Random odd sets in the table4 sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (grading->parsed()) return cmd_grading(o, out);
    if (sigchange->parsed()) return cmd_sigchange(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAssociative& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace clifford
