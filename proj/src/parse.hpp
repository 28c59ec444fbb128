#ifndef MONRES_PARSE_HPP
#define MONRES_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "monomial.hpp"

namespace monres {

/// Result of scanning ideal text: the variables in first-appearance order
/// and the raw generator list before minimalization.
struct ParsedIdeal {
  VariableSet variables;
  std::vector<Monomial> raw_generators;
};

/// Parses `mono ("," mono)*`. Whitespace is insignificant; `#` starts a
/// comment that runs to end of line. Monomials follow
/// `factor ("*" factor)*` with `factor := ident ("^" uint)?` and
/// `ident := [A-Za-z][A-Za-z0-9_]*`; the literal `1` is the unit monomial.
/// A purely alphabetic ident of length >= 2 is read as a product of
/// single-letter variables (`cd` = `c*d`), and the `*` between factors may
/// be omitted where the tokens stay unambiguous (`a^3b^2`). Identifiers
/// containing digits or underscores are single variables (`x1`).
/// Variables are registered in first-appearance order.
ParsedIdeal parse_ideal_text(std::string_view text);

/// Parses one monomial against a fixed variable set; unknown variables are
/// a parse error. Used for CLI arguments such as a multidegree filter.
Monomial parse_monomial(std::string_view text, const VariableSet& vars);

}  // namespace monres

#endif
