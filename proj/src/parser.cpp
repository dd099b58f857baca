#include "clifford/parser.hpp"

#include <cctype>

#include "clifford/errors.hpp"

namespace clifford {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const ProductFn& product)
      : text_(text), sig_(sig), product_(product) {}

  Multivector parse() {
    Multivector result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Multivector expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Multivector acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Multivector term() {
    Multivector acc = factor();
    while (true) {
      if (accept('*')) {
        acc = product_(acc, factor());
      } else if (accept('^')) {
        acc = wedge(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Multivector factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Multivector inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'e') return blade();
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Multivector rational() {
    std::string num = digits();
    Rational value(num, 10);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      std::string den = digits();
      if (den.empty()) fail("expected denominator");
      Rational d(den, 10);
      if (d == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      value /= d;
    }
    return Multivector::scalar(sig_, value);
  }

  Multivector blade() {
    Multivector acc = Multivector::scalar(sig_, 1);
    bool first = true;
    while (pos_ < text_.size() && text_[pos_] == 'e') {
      std::size_t start = pos_;
      ++pos_;
      std::string idx = digits();
      if (idx.empty()) {
        pos_ = start + 1;
        fail("expected generator index after 'e'");
      }
      if (idx.size() > 3 || !sig_.contains(std::stoi(idx))) {
        throw IndexOutOfRange("generator e" + idx + " outside signature " + to_string(sig_) +
                              " at position " + std::to_string(start));
      }
      Multivector gen = Multivector::basis_vector(sig_, std::stoi(idx));
      acc = first ? gen : product_(acc, gen);
      first = false;
    }
    return acc;
  }

  std::string_view text_;
  Signature sig_;
  const ProductFn& product_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) {
  static const ProductFn geometric = [](const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
  };
  return parse_multivector(text, sig, geometric);
}

Multivector parse_multivector(std::string_view text, const Signature& sig, const ProductFn& product) {
  return Parser(text, sig, product).parse();
}

std::string format_multivector(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [blade, c] : a.terms()) {
    bool negative = c < 0;
    Rational magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (blade.is_scalar()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(blade);
    } else {
      out += to_string(magnitude) + "*" + to_string(blade);
    }
  }
  return out;
}

}  // namespace clifford
