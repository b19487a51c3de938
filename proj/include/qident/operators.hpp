#ifndef QIDENT_OPERATORS_HPP
#define QIDENT_OPERATORS_HPP

#include <optional>

#include "qident/qcore.hpp"

namespace qident {

/// Which pair of variables an operator acts on; q is the symbol q unless a
/// rational value is given.
struct OperatorVars {
    Sym x = Sym::x;
    Sym y = Sym::y;
    std::optional<BigRational> q;
};

/// D_xy f = (f(x, q^-1 y) - f(qx, y))/(x - q^-1 y). Throws NotInDomain when
/// the difference is not divisible.
MultiPoly apply_D(const MultiPoly& f, OperatorVars v = {});
/// theta_xy f = (f(q^-1 x, y) - f(x, qy))/(q^-1 x - y).
MultiPoly apply_theta(const MultiPoly& f, OperatorVars v = {});

/// Versions on rational functions whose denominators are free of x and y.
RatFunc apply_D(const RatFunc& f, OperatorVars v = {});
RatFunc apply_theta(const RatFunc& f, OperatorVars v = {});

/// T(a, zD) f = sum_k (a;q)_k/(q;q)_k z^k D^k f. k_max < 0 uses the (x,y)-degree
/// of f; KMaxTooSmall if D^(k_max+1) f is still nonzero.
RatFunc apply_T(const RatFunc& a, const RatFunc& z, const RatFunc& f, int k_max = -1, OperatorVars v = {});
/// E(a, z theta) f = sum_k (a;q)_k/(q;q)_k (-z theta)^k f.
RatFunc apply_E(const RatFunc& a, const RatFunc& z, const RatFunc& f, int k_max = -1, OperatorVars v = {});

/// Coefficientwise on series; the expansion variables must not be x or y.
TruncSeries<RatFunc> apply_T(const RatFunc& a, const RatFunc& z, const TruncSeries<RatFunc>& f, OperatorVars v = {});
TruncSeries<RatFunc> apply_E(const RatFunc& a, const RatFunc& z, const TruncSeries<RatFunc>& f, OperatorVars v = {});

} // namespace qident

#endif // QIDENT_OPERATORS_HPP
