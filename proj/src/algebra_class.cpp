#include "clifford/algebra_class.hpp"

#include <algorithm>
#include <cctype>

#include "clifford/errors.hpp"

namespace clifford {

char symbol(DivisionRing k) {
  switch (k) {
    case DivisionRing::Real:
      return 'R';
    case DivisionRing::Complex:
      return 'C';
    case DivisionRing::Quaternion:
      return 'H';
  }
  return '?';
}

namespace {

DivisionRing ring_from_symbol(char c) {
  switch (c) {
    case 'R':
      return DivisionRing::Real;
    case 'C':
      return DivisionRing::Complex;
    case 'H':
      return DivisionRing::Quaternion;
    default:
      throw InvalidArgument(std::string("unknown division ring '") + c + "'");
  }
}

}  // namespace

AlgebraClass::AlgebraClass(std::vector<SimpleComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.m < 1) throw InvalidArgument("matrix size must be positive");
  }
  std::sort(components_.begin(), components_.end());
}

long long AlgebraClass::real_dimension() const {
  long long total = 0;
  for (const auto& c : components_) total += c.real_dimension();
  return total;
}

AlgebraClass AlgebraClass::with_matrix_size(int m) const {
  std::vector<SimpleComponent> out = components_;
  for (auto& c : out) c.m *= m;
  return AlgebraClass(std::move(out));
}

AlgebraClass direct_sum(const AlgebraClass& a, const AlgebraClass& b) {
  std::vector<SimpleComponent> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return AlgebraClass(std::move(all));
}

std::string to_string(const AlgebraClass& cls) {
  if (cls.components().empty()) return "0";
  std::string out;
  for (const auto& c : cls.components()) {
    if (!out.empty()) out += " (+) ";
    if (c.m == 1) {
      out += symbol(c.ring);
    } else {
      out += "M(" + std::to_string(c.m) + "," + symbol(c.ring) + ")";
    }
  }
  return out;
}

AlgebraClass parse_algebra_class(std::string_view text) {
  std::vector<SimpleComponent> comps;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) { throw ParseError(msg, pos); };
  while (true) {
    skip();
    if (pos >= text.size()) fail("expected algebra component");
    if (text[pos] == 'M') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(') fail("expected '('");
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 6) fail("expected matrix size");
      int m = std::stoi(std::string(text.substr(start, pos - start)));
      if (pos >= text.size() || text[pos] != ',') fail("expected ','");
      ++pos;
      if (pos >= text.size()) fail("expected division ring");
      DivisionRing k = ring_from_symbol(text[pos++]);
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      if (m < 1) fail("matrix size must be positive");
      comps.push_back({m, k});
    } else {
      comps.push_back({1, ring_from_symbol(text[pos++])});
    }
    skip();
    if (pos == text.size()) break;
    if (text.substr(pos, 3) != "(+)") fail("expected '(+)'");
    pos += 3;
  }
  return AlgebraClass(std::move(comps));
}

nlohmann::json to_json(const AlgebraClass& cls) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : cls.components()) {
    comps.push_back({{"m", c.m}, {"K", std::string(1, symbol(c.ring))}});
  }
  return {{"components", comps}};
}

AlgebraClass algebra_class_from_json(const nlohmann::json& j) {
  std::vector<SimpleComponent> comps;
  for (const auto& c : j.at("components")) {
    std::string k = c.at("K").get<std::string>();
    if (k.size() != 1) throw InvalidArgument("division ring tag must be R, C or H");
    comps.push_back({c.at("m").get<int>(), ring_from_symbol(k[0])});
  }
  return AlgebraClass(std::move(comps));
}

namespace {

// K1 (x) K2 over R.
std::vector<SimpleComponent> ring_tensor(DivisionRing a, DivisionRing b) {
  using enum DivisionRing;
  if (a == Real) return {{1, b}};
  if (b == Real) return {{1, a}};
  if (a == Complex && b == Complex) return {{1, Complex}, {1, Complex}};
  if (a == Quaternion && b == Quaternion) return {{4, Real}};
  return {{2, Complex}};  // C (x) H
}

}  // namespace

AlgebraClass tensor_simplify(const AlgebraClass& x, const AlgebraClass& y) {
  std::vector<SimpleComponent> out;
  for (const auto& a : x.components()) {
    for (const auto& b : y.components()) {
      for (SimpleComponent c : ring_tensor(a.ring, b.ring)) {
        c.m *= a.m * b.m;
        out.push_back(c);
      }
    }
  }
  return AlgebraClass(std::move(out));
}

}  // namespace clifford
