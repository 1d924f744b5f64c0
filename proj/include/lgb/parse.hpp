#ifndef LGB_PARSE_HPP
#define LGB_PARSE_HPP

#include "lgb/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Grammar (whitespace insignificant):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [coeff '*'] factor ('*' factor)*  |  coeff
//   factor := var ['^' posint]
//   coeff  := int | int '/' posint | sym ['^' posint] | int ['/' posint] '*' sym ['^' posint]
// where sym is the declared extension symbol, if any. Variable order is taken
// from the explicit list when given, else first appearance.
Polynomial parse_polynomial(const std::string& text,
                            std::optional<std::vector<std::string>> variables = std::nullopt,
                            const FieldPtr& extension = nullptr);

// "p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(const std::string& text);

// Semicolon-separated phase vectors, each a comma-separated rational list,
// e.g. "1/2,1/2;0,1/3". Empty string yields no generators.
std::vector<std::vector<Rational>> parse_group_generators(const std::string& text);

}  // namespace lgb

#endif
