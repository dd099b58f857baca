#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace clifford {

enum class DivisionRing { Real = 1, Complex = 2, Quaternion = 4 };

inline int real_dimension(DivisionRing k) { return static_cast<int>(k); }
char symbol(DivisionRing k);

// M(m, K).
struct SimpleComponent {
  int m = 1;
  DivisionRing ring = DivisionRing::Real;

  long long real_dimension() const { return static_cast<long long>(m) * m * clifford::real_dimension(ring); }
  friend auto operator<=>(const SimpleComponent&, const SimpleComponent&) = default;
};

// Isomorphism class of a finite-dimensional semisimple real algebra: a
// multiset of simple components, kept sorted so that equality is multiset
// equality.
class AlgebraClass {
 public:
  AlgebraClass() = default;
  explicit AlgebraClass(std::vector<SimpleComponent> components);

  static AlgebraClass simple(int m, DivisionRing ring) { return AlgebraClass({{m, ring}}); }

  const std::vector<SimpleComponent>& components() const { return components_; }
  long long real_dimension() const;

  // M(m, R) (x) this.
  AlgebraClass with_matrix_size(int m) const;

  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
  friend auto operator<=>(const AlgebraClass&, const AlgebraClass&) = default;

 private:
  std::vector<SimpleComponent> components_;
};

AlgebraClass direct_sum(const AlgebraClass& a, const AlgebraClass& b);

// "R", "M(2,H)", "C (+) C".
std::string to_string(const AlgebraClass& cls);
AlgebraClass parse_algebra_class(std::string_view text);

// { "components": [ { "m": 2, "K": "H" } ] }
nlohmann::json to_json(const AlgebraClass& cls);
AlgebraClass algebra_class_from_json(const nlohmann::json& j);

// Normal form of x (x) y using M(a,R)(x)M(b,K) = M(ab,K), C(x)C = C(+)C,
// C(x)H = M(2,C), H(x)H = M(4,R), and distribution over (+).
AlgebraClass tensor_simplify(const AlgebraClass& x, const AlgebraClass& y);

}  // namespace clifford
