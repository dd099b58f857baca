#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "clifford/multivector.hpp"

namespace clifford {

using ProductFn = std::function<Multivector(const Multivector&, const Multivector&)>;

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'^') factor)*
//   factor   := rational | blade | '(' expr ')'
//   blade    := 'e' digits ('e' digits)*
//   rational := integer ('/' integer)?
//
// '*' and juxtaposed generators inside a blade literal use `product`
// (the geometric product by default); '^' is always the wedge. Throws
// ParseError (with a 0-based character position) or IndexOutOfRange.
Multivector parse_multivector(std::string_view text, const Signature& sig);
Multivector parse_multivector(std::string_view text, const Signature& sig, const ProductFn& product);

// Canonical text form: terms ordered by grade then index set, unit
// coefficients elided, e.g. "1 + 2*e1^e2 - 1/3*e1^e2^e3". Zero prints as "0".
std::string format_multivector(const Multivector& a);

}  // namespace clifford
