#include "qident/operators.hpp"

namespace qident {

namespace {

// x -> q^e x as a monomial factor and a rational scale
std::pair<Monomial, BigRational> dilation(const OperatorVars& v, int e) {
    if (v.q) return {Monomial{}, v.q->pow(e)};
    return {Monomial::var(Sym::q, e), BigRational(1)};
}

MultiPoly dilate(const MultiPoly& f, Sym s, const OperatorVars& v, int e) {
    const auto [m, c] = dilation(v, e);
    return f.scale_var(s, m, c);
}

MultiPoly scaled_var(Sym s, const OperatorVars& v, int e) {
    const auto [m, c] = dilation(v, e);
    return MultiPoly::monomial(Monomial::var(s) * m, c);
}

MultiPoly divide(const MultiPoly& num, const MultiPoly& den, Sym pivot, const char* what) {
    if (num.is_zero()) return num;
    MultiPoly out;
    if (!num.try_div_exact_in(den, pivot, out))
        throw NotInDomain(std::string(what) + ": difference is not divisible by the operator denominator");
    return out;
}

void require_xy_free(const RatFunc& f, OperatorVars v) {
    for (const auto& fac : f.den_factors())
        if (fac.atom.get().contains(v.x) || fac.atom.get().contains(v.y))
            throw NotInDomain("operator target has a denominator depending on the operator variables");
}

int xy_degree(const MultiPoly& p, OperatorVars v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m[v.x] + m[v.y]);
    return d;
}

template <class Step>
RatFunc operator_series(const RatFunc& a, const RatFunc& z, const RatFunc& f, int k_max, OperatorVars v, bool theta,
                        Step step) {
    require_xy_free(f, v);
    if (k_max < 0) k_max = xy_degree(f.num(), v);
    const RatFunc q = v.q ? RatFunc(*v.q) : RatFunc::var(Sym::q);
    std::vector<RatFunc> terms{f};
    RatFunc coef(1), g = f;
    for (int k = 1;; ++k) {
        g = step(g);
        if (g.is_zero()) break;
        if (k > k_max) throw KMaxTooSmall("operator series did not terminate within k_max = " + std::to_string(k_max));
        // (a;q)_k/(q;q)_k z^k, with z -> -z for E
        coef = coef * (1 - a * q.pow(k - 1)) * z / (1 - q.pow(k));
        if (theta) coef = -coef;
        terms.push_back(coef * g);
    }
    return RatFunc::sum(terms);
}

} // namespace

MultiPoly apply_D(const MultiPoly& f, OperatorVars v) {
    if (v.x == v.y) throw NotInDomain("operator variables must differ");
    const MultiPoly num = dilate(f, v.y, v, -1) - dilate(f, v.x, v, 1);
    const MultiPoly den = MultiPoly::var(v.x) - scaled_var(v.y, v, -1);
    return divide(num, den, v.x, "D");
}

MultiPoly apply_theta(const MultiPoly& f, OperatorVars v) {
    if (v.x == v.y) throw NotInDomain("operator variables must differ");
    const MultiPoly num = dilate(f, v.x, v, -1) - dilate(f, v.y, v, 1);
    const MultiPoly den = scaled_var(v.x, v, -1) - MultiPoly::var(v.y);
    return divide(num, den, v.x, "theta");
}

RatFunc apply_D(const RatFunc& f, OperatorVars v) {
    require_xy_free(f, v);
    return f.with_numerator(apply_D(f.num(), v));
}

RatFunc apply_theta(const RatFunc& f, OperatorVars v) {
    require_xy_free(f, v);
    return f.with_numerator(apply_theta(f.num(), v));
}

RatFunc apply_T(const RatFunc& a, const RatFunc& z, const RatFunc& f, int k_max, OperatorVars v) {
    return operator_series(a, z, f, k_max, v, false, [&](const RatFunc& g) { return apply_D(g, v); });
}

RatFunc apply_E(const RatFunc& a, const RatFunc& z, const RatFunc& f, int k_max, OperatorVars v) {
    return operator_series(a, z, f, k_max, v, true, [&](const RatFunc& g) { return apply_theta(g, v); });
}

TruncSeries<RatFunc> apply_T(const RatFunc& a, const RatFunc& z, const TruncSeries<RatFunc>& f, OperatorVars v) {
    for (Sym s : f.vars())
        if (s == v.x || s == v.y) throw NotInDomain("operator variable used as expansion variable");
    return f.map([&](const RatFunc& c) { return c.is_zero() ? c : apply_T(a, z, c, -1, v); });
}

TruncSeries<RatFunc> apply_E(const RatFunc& a, const RatFunc& z, const TruncSeries<RatFunc>& f, OperatorVars v) {
    for (Sym s : f.vars())
        if (s == v.x || s == v.y) throw NotInDomain("operator variable used as expansion variable");
    return f.map([&](const RatFunc& c) { return c.is_zero() ? c : apply_E(a, z, c, -1, v); });
}

} // namespace qident
