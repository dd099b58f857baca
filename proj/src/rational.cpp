#include "clifford/rational.hpp"

#include <cctype>

#include "clifford/errors.hpp"

namespace clifford {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string cleaned;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') cleaned.push_back('-');
    ++i;
  }
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
      cleaned.push_back(c);
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      cleaned.push_back(c);
    } else {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  Rational r;
  if (r.set_str(cleaned, 10) != 0) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace clifford
