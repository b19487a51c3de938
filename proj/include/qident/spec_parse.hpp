#ifndef QIDENT_SPEC_PARSE_HPP
#define QIDENT_SPEC_PARSE_HPP

#include <string_view>

#include "qident/numeric.hpp"

namespace qident {

/// Rational expression in the standard symbols: + - * / ^int, parentheses,
/// rational or decimal literals. Throws ParseError / SymbolError.
RatFunc parse_expression(std::string_view text);

/// Unevaluated rPhis written as "[a1, a2; b1; z]", optionally prefixed by
/// "<r>phi<s>". An empty list may be left blank or written "-".
struct PhiText {
    std::vector<RatFunc> upper;
    std::vector<RatFunc> lower;
    RatFunc argument;
};
PhiText parse_phi(std::string_view text);

/// Binds every symbol and returns a scalar spec. An upper parameter equal to
/// q^-m (m >= 0) marks the series as terminating after m terms.
PhiSpec<BigRational> bind_phi(const PhiText& phi, const Assignment& values);

/// "name=value" pairs separated by commas or given one at a time.
Assignment parse_bindings(const std::vector<std::string>& items);

} // namespace qident

#endif // QIDENT_SPEC_PARSE_HPP
