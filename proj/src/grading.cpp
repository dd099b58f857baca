#include "clifford/grading.hpp"

#include <bit>
#include <fstream>

#include "clifford/errors.hpp"

namespace clifford {

Z2Grading::Z2Grading(Signature sig, BasisBlade odd_set) : sig_(sig), odd_(odd_set) {
  if (odd_set.highest_index() > sig.dimension()) {
    throw IndexOutOfRange("odd set " + to_string(odd_set) + " outside signature " + to_string(sig));
  }
}

Z2Grading Z2Grading::usual(Signature sig) {
  return Z2Grading(sig, BasisBlade::from_mask((BasisBlade::Mask{1} << sig.dimension()) - 1));
}

Z2Grading Z2Grading::from_odd_indices(Signature sig, std::span<const int> odd_indices) {
  return Z2Grading(sig, BasisBlade::from_indices(odd_indices));
}

Z2Grading Z2Grading::canonical(Signature sig, int p0, int q0) {
  if (p0 < 0 || p0 > sig.p() || q0 < 0 || q0 > sig.q()) {
    throw InvalidArgument("(p0,q0) = (" + std::to_string(p0) + "," + std::to_string(q0) +
                          ") out of range for " + to_string(sig));
  }
  std::vector<int> odd;
  for (int i = p0 + 1; i <= sig.p(); ++i) odd.push_back(i);
  for (int i = sig.p() + q0 + 1; i <= sig.dimension(); ++i) odd.push_back(i);
  return from_odd_indices(sig, odd);
}

bool Z2Grading::is_usual() const { return odd_ == usual(sig_).odd_; }

int Z2Grading::parity_of(BasisBlade blade) const { return std::popcount(blade.mask() & odd_.mask()) & 1; }

GradingCounts Z2Grading::counts() const {
  GradingCounts c;
  for (int i = 1; i <= sig_.dimension(); ++i) {
    bool positive = i <= sig_.p();
    if (is_odd(i)) {
      (positive ? c.p1 : c.q1)++;
    } else {
      (positive ? c.p0 : c.q0)++;
    }
  }
  return c;
}

std::string to_string(const Z2Grading& gr) {
  if (gr.is_trivial()) return "trivial";
  if (gr.is_usual()) return "usual";
  std::string out = "odd{";
  bool first = true;
  for (int i : gr.odd_set().indices()) {
    if (!first) out += ',';
    out += 'e' + std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

void require_grading_signature(const Multivector& a, const Z2Grading& gr) {
  if (a.signature() != gr.signature()) {
    throw SignatureMismatch("multivector over " + to_string(a.signature()) + " but grading over " +
                            to_string(gr.signature()));
  }
}

Multivector keep_parity(const Multivector& a, const Z2Grading& gr, int wanted) {
  require_grading_signature(a, gr);
  Multivector::Terms terms;
  for (const auto& [blade, c] : a.terms()) {
    if (gr.parity_of(blade) == wanted) terms.emplace(blade, c);
  }
  return Multivector(a.signature(), std::move(terms));
}

}  // namespace

Multivector alpha(const Multivector& a, const Z2Grading& gr) {
  require_grading_signature(a, gr);
  Multivector::Terms terms;
  for (const auto& [blade, c] : a.terms()) {
    terms.emplace(blade, gr.parity_of(blade) ? Rational(-c) : c);
  }
  return Multivector(a.signature(), std::move(terms));
}

// (a + alpha(a))/2 and (a - alpha(a))/2 reduce to selecting blades by parity.
Multivector project_even(const Multivector& a, const Z2Grading& gr) { return keep_parity(a, gr, 0); }
Multivector project_odd(const Multivector& a, const Z2Grading& gr) { return keep_parity(a, gr, 1); }

std::vector<BasisBlade> even_subalgebra_basis(const Z2Grading& gr) {
  std::vector<BasisBlade> out;
  for (BasisBlade b : all_blades(gr.signature())) {
    if (gr.parity_of(b) == 0) out.push_back(b);
  }
  return out;
}

DimensionCheck dimension_dichotomy_check(const Z2Grading& gr) {
  const std::size_t full = std::size_t{1} << gr.signature().dimension();
  const std::size_t dim = even_subalgebra_basis(gr).size();
  if (dim == full) return {DimensionCase::Trivial, dim};
  if (2 * dim == full) return {DimensionCase::Half, dim};
  throw Error("even subalgebra of dimension " + std::to_string(dim) + " inside a " + std::to_string(full) +
              "-dimensional algebra");
}

ClosureReport grading_closure_check(const Z2Grading& gr) {
  ClosureReport report;
  const Signature& sig = gr.signature();
  const auto blades = all_blades(sig);
  for (BasisBlade a : blades) {
    for (BasisBlade b : blades) {
      ++report.pairs_checked;
      Multivector prod = geometric_product(Multivector::blade(sig, a), Multivector::blade(sig, b));
      int expected = (gr.parity_of(a) + gr.parity_of(b)) & 1;
      Multivector kept = expected == 0 ? project_even(prod, gr) : project_odd(prod, gr);
      if (kept != prod) report.violations.push_back({a, b});
    }
  }
  return report;
}

bool odd_multiplication_is_bijective(const Z2Grading& gr) {
  if (gr.is_trivial()) return false;
  const Signature& sig = gr.signature();
  const Multivector u = Multivector::basis_vector(sig, gr.odd_set().indices().front());
  const auto even = even_subalgebra_basis(gr);
  std::vector<BasisBlade> odd;
  for (BasisBlade b : all_blades(sig)) {
    if (gr.parity_of(b) == 1) odd.push_back(b);
  }
  if (odd.size() != even.size()) return false;
  // Column j holds the Cl1 coordinates of u * even[j].
  Matrix m(odd.size(), even.size());
  for (std::size_t j = 0; j < even.size(); ++j) {
    Multivector image = geometric_product(u, Multivector::blade(sig, even[j]));
    for (std::size_t i = 0; i < odd.size(); ++i) m(i, j) = image.coefficient(odd[i]);
    if (project_odd(image, gr) != image) return false;
  }
  return rank(m) == even.size();
}

Matrix metric_matrix(const Signature& sig) {
  const int n = sig.dimension();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = sig.square(i + 1);
  return g;
}

namespace {

// Metric signature of g restricted to the column span of `basis`.
Inertia restricted_inertia(const Matrix& basis, const Matrix& g) {
  if (basis.cols() == 0) return {};
  return symmetric_inertia(basis.transpose() * g * basis);
}

}  // namespace

InvolutionData validate_involution(const Involution& inv, const Signature& sig) {
  const Matrix& a = inv.matrix;
  const std::size_t n = static_cast<std::size_t>(sig.dimension());
  if (a.rows() != n || a.cols() != n) {
    throw InvalidArgument("involution must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  const Matrix id = Matrix::identity(n);
  if (a * a != id) throw NotInvolution("alpha restricted to V does not square to the identity");
  const Matrix g = metric_matrix(sig);
  if (a.transpose() * g * a != g) throw NotIsometry("alpha restricted to V does not preserve the metric g");

  InvolutionData data{.counts = {},
                      .even_basis = null_space(a - id),
                      .odd_basis = null_space(a + id),
                      .orthogonal = false,
                      .normal_form = Z2Grading::trivial(sig)};
  Inertia even = restricted_inertia(data.even_basis, g);
  Inertia odd = restricted_inertia(data.odd_basis, g);
  // An isometry has nondegenerate eigenspaces; a zero here would be a
  // counterexample to the orthogonal splitting.
  if (even.zero != 0 || odd.zero != 0) throw Error("degenerate eigenspace of an isometric involution");
  data.counts = {static_cast<int>(even.positive), static_cast<int>(even.negative),
                 static_cast<int>(odd.positive), static_cast<int>(odd.negative)};
  data.orthogonal = data.even_basis.cols() == 0 || data.odd_basis.cols() == 0 ||
                    (data.even_basis.transpose() * g * data.odd_basis) ==
                        Matrix(data.even_basis.cols(), data.odd_basis.cols());
  data.normal_form = Z2Grading::canonical(sig, data.counts.p0, data.counts.q0);
  return data;
}

Involution involution_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("involution JSON must be an array of rows");
  const std::size_t n = j.size();
  Involution inv{Matrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n) {
      throw InvalidArgument("involution row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& entry = row[c];
      if (entry.is_string()) {
        inv.matrix(r, c) = parse_rational(entry.get<std::string>());
      } else if (entry.is_number_integer()) {
        inv.matrix(r, c) = Rational(entry.get<long>());
      } else {
        throw InvalidArgument("involution entries must be \"num/den\" strings or integers");
      }
    }
  }
  return inv;
}

Involution load_involution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open involution file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed involution JSON in " + path.string() + ": " + e.what());
  }
  return involution_from_json(j);
}

}  // namespace clifford
