#include "clifford/structure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "clifford/errors.hpp"

namespace clifford {

void StructureConstants::set_product(std::size_t i, std::size_t j, SparseVector coords) {
  std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(coords, [](const auto& e) { return e.second == 0; });
  products_[i * dim_ + j] = std::move(coords);
}

Rational StructureConstants::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  const SparseVector& v = product(i, j);
  auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
  return (it != v.end() && it->first == k) ? it->second : Rational(0);
}

Matrix StructureConstants::left_multiplication(std::size_t i) const {
  Matrix l(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [k, c] : product(i, j)) l(k, j) = c;
  }
  return l;
}

std::vector<Rational> StructureConstants::multiply(const std::vector<Rational>& x,
                                                   const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational xy = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

RegularRepresentation regular_representation(std::span<const Multivector> basis, const ProductFn& product) {
  const std::size_t d = basis.size();
  if (d == 0) throw InvalidArgument("empty basis");
  const Signature sig = basis.front().signature();
  std::map<BasisBlade, std::size_t> blade_index;
  for (const auto& b : basis) {
    if (b.signature() != sig) throw SignatureMismatch("basis elements over different signatures");
    for (const auto& [blade, c] : b.terms()) blade_index.try_emplace(blade, 0);
  }
  std::size_t next = 0;
  for (auto& [blade, idx] : blade_index) idx = next++;
  const std::size_t rows = blade_index.size();

  // Coordinates of the basis: column j is basis[j] over the blades in use.
  Matrix coords(rows, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [blade, c] : basis[j].terms()) coords(blade_index.at(blade), j) = c;
  }
  // Pivot columns of the transpose pick d blade rows forming an invertible
  // square block.
  RowEchelon e = row_reduce(coords.transpose());
  if (e.pivot_columns.size() < d) throw NotIndependent("basis is linearly dependent");
  std::vector<BasisBlade> pivot_blades;
  Matrix square(d, d);
  {
    std::vector<BasisBlade> blades_by_row(rows);
    for (const auto& [blade, idx] : blade_index) blades_by_row[idx] = blade;
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t row = e.pivot_columns[r];
      pivot_blades.push_back(blades_by_row[row]);
      for (std::size_t j = 0; j < d; ++j) square(r, j) = coords(row, j);
    }
  }
  const Matrix inv = *inverse(square);

  RegularRepresentation rep{std::vector<Multivector>(basis.begin(), basis.end()), StructureConstants(d)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Multivector prod = product(basis[i], basis[j]);
      std::vector<Rational> x(d);
      for (std::size_t r = 0; r < d; ++r) {
        Rational y = prod.coefficient(pivot_blades[r]);
        if (y == 0) continue;
        for (std::size_t k = 0; k < d; ++k) {
          if (inv(k, r) != 0) x[k] += inv(k, r) * y;
        }
      }
      Multivector rebuilt(sig);
      SparseVector sparse;
      for (std::size_t k = 0; k < d; ++k) {
        if (x[k] == 0) continue;
        rebuilt += basis[k] * x[k];
        sparse.emplace_back(k, x[k]);
      }
      if (rebuilt != prod) {
        throw NotClosed("product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                        " leaves the span");
      }
      rep.constants.set_product(i, j, std::move(sparse));
    }
  }
  return rep;
}

RegularRepresentation regular_representation(const Signature& sig, std::span<const BasisBlade> blades,
                                             const ProductFn& product) {
  std::vector<Multivector> basis;
  basis.reserve(blades.size());
  for (BasisBlade b : blades) basis.push_back(Multivector::blade(sig, b));
  return regular_representation(basis, product);
}

std::string to_string(const StructuralInvariants& inv) {
  auto pair = [](const Inertia& i) {
    return "(" + std::to_string(i.positive) + "," + std::to_string(i.negative) + ")";
  };
  return "dim=" + std::to_string(inv.dimension) + " center=" + std::to_string(inv.center_dimension) +
         " trace=" + pair(inv.trace_form) + " center_trace=" + pair(inv.center_trace_form);
}

nlohmann::json to_json(const StructuralInvariants& inv) {
  return {{"dim", inv.dimension},
          {"center_dim", inv.center_dimension},
          {"trace_sig", {inv.trace_form.positive, inv.trace_form.negative}},
          {"center_trace_sig", {inv.center_trace_form.positive, inv.center_trace_form.negative}}};
}

namespace {

void add_into(std::vector<Rational>& acc, const SparseVector& v, const Rational& scale) {
  for (const auto& [k, c] : v) acc[k] += scale * c;
}

void check_associativity(const StructureConstants& sc) {
  const std::size_t d = sc.dimension();
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::vector<Rational> left(d), right(d);
    for (const auto& [m, c] : sc.product(i, j)) add_into(left, sc.product(m, k), c);
    for (const auto& [m, c] : sc.product(j, k)) add_into(right, sc.product(i, m), c);
    if (left != right) {
      throw NotAssociative("(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k) +
                           " != b" + std::to_string(i) + " (b" + std::to_string(j) + " b" +
                           std::to_string(k) + ")");
    }
  };
  if (d <= 16) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) check(i, j, k);
    return;
  }
  std::mt19937_64 rng(0x5eedULL + d);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (int t = 0; t < 2000; ++t) check(pick(rng), pick(rng), pick(rng));
}

// Basis (as columns) of the center: elements commuting with every basis
// element, found by successively restricting to the kernel of [., b_j].
Matrix center_basis(const StructureConstants& sc) {
  const std::size_t d = sc.dimension();
  std::vector<std::vector<Rational>> z(d, std::vector<Rational>(d));
  for (std::size_t t = 0; t < d; ++t) z[t][t] = 1;
  for (std::size_t j = 0; j < d && !z.empty(); ++j) {
    Matrix commutators(d, z.size());
    for (std::size_t col = 0; col < z.size(); ++col) {
      std::vector<Rational> acc(d);
      for (std::size_t t = 0; t < d; ++t) {
        const Rational& zt = z[col][t];
        if (zt == 0) continue;
        add_into(acc, sc.product(t, j), zt);
        add_into(acc, sc.product(j, t), -zt);
      }
      for (std::size_t r = 0; r < d; ++r) commutators(r, col) = acc[r];
    }
    Matrix kernel = null_space(commutators);
    std::vector<std::vector<Rational>> next(kernel.cols(), std::vector<Rational>(d));
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
      for (std::size_t col = 0; col < z.size(); ++col) {
        const Rational& w = kernel(col, k);
        if (w == 0) continue;
        for (std::size_t t = 0; t < d; ++t) {
          if (z[col][t] != 0) next[k][t] += w * z[col][t];
        }
      }
    }
    z = std::move(next);
  }
  Matrix basis(d, z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    for (std::size_t t = 0; t < d; ++t) basis(t, k) = z[k][t];
  }
  return basis;
}

}  // namespace

StructuralInvariants structural_invariants(const StructureConstants& sc) {
  const std::size_t d = sc.dimension();
  check_associativity(sc);

  // tr(L_x L_y) = tr(L_{xy}); tr(L_k) = sum_m c_{kmm}.
  std::vector<Rational> traces(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t m = 0; m < d; ++m) traces[k] += sc.coefficient(k, m, m);
  }
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : sc.product(i, j)) {
        if (traces[k] != 0) form(i, j) += c * traces[k];
      }
    }
  }
  const Matrix center = center_basis(sc);

  StructuralInvariants out;
  out.dimension = d;
  out.center_dimension = center.cols();
  out.trace_form = symmetric_inertia(form);
  out.center_trace_form = center.cols() == 0 ? Inertia{} : symmetric_inertia(center.transpose() * form * center);
  return out;
}

namespace {

// Multiplication table of the division ring basis {1, i, j, k}: unit index
// and sign of basis[a] * basis[b].
std::pair<std::size_t, int> ring_product(DivisionRing ring, std::size_t a, std::size_t b) {
  switch (ring) {
    case DivisionRing::Real:
      return {0, 1};
    case DivisionRing::Complex:
      return {a ^ b, (a == 1 && b == 1) ? -1 : 1};
    case DivisionRing::Quaternion: {
      if (a == 0) return {b, 1};
      if (b == 0) return {a, 1};
      if (a == b) return {0, -1};
      // i j = k, j k = i, k i = j and the reversed orders pick up a sign.
      std::size_t c = 6 - a - b;
      bool cyclic = (b == a % 3 + 1);
      return {c, cyclic ? 1 : -1};
    }
  }
  return {0, 0};
}

void append_simple(StructureConstants& sc, std::size_t offset, const SimpleComponent& comp) {
  const std::size_t m = static_cast<std::size_t>(comp.m);
  const std::size_t k = static_cast<std::size_t>(real_dimension(comp.ring));
  auto index = [&](std::size_t row, std::size_t col, std::size_t unit) { return offset + (row * m + col) * k + unit; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t d = 0; d < m; ++d)
            for (std::size_t t = 0; t < k; ++t) {
              if (b != c) continue;  // E_ab E_cd = delta_bc E_ad
              auto [u, sign] = ring_product(comp.ring, s, t);
              sc.set_product(index(a, b, s), index(c, d, t), {{index(a, d, u), Rational(sign)}});
            }
}

}  // namespace

StructureConstants reference_realization(const AlgebraClass& cls) {
  StructureConstants sc(static_cast<std::size_t>(cls.real_dimension()));
  std::size_t offset = 0;
  for (const auto& comp : cls.components()) {
    append_simple(sc, offset, comp);
    offset += static_cast<std::size_t>(comp.real_dimension());
  }
  return sc;
}

StructuralInvariants expected_invariants(const AlgebraClass& cls) {
  static std::mutex mutex;
  static std::map<SimpleComponent, StructuralInvariants> cache;
  StructuralInvariants total;
  for (const auto& comp : cls.components()) {
    StructuralInvariants part;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find(comp);
      if (it != cache.end()) part = it->second;
    }
    if (part.dimension == 0) {
      part = structural_invariants(reference_realization(AlgebraClass({comp})));
      std::lock_guard lock(mutex);
      cache.emplace(comp, part);
    }
    total.dimension += part.dimension;
    total.center_dimension += part.center_dimension;
    total.trace_form.positive += part.trace_form.positive;
    total.trace_form.negative += part.trace_form.negative;
    total.trace_form.zero += part.trace_form.zero;
    total.center_trace_form.positive += part.center_trace_form.positive;
    total.center_trace_form.negative += part.center_trace_form.negative;
    total.center_trace_form.zero += part.center_trace_form.zero;
  }
  return total;
}

}  // namespace clifford
