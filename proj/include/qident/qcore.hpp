#ifndef QIDENT_QCORE_HPP
#define QIDENT_QCORE_HPP

#include <optional>
#include <vector>

#include "qident/field.hpp"
#include "qident/series.hpp"

namespace qident {

inline long binom2(long n) { return n * (n - 1) / 2; }

// Ring helpers shared by MultiPoly, RatFunc and BigRational.
inline MultiPoly ring_pow(const MultiPoly& x, int e) {
    if (e >= 0) return x.pow(static_cast<unsigned>(e));
    if (!x.is_monomial()) throw NotInDomain("negative power of a non-monomial polynomial");
    const auto& [m, c] = x.terms()[0];
    MultiPoly r = MultiPoly::monomial(m.pow(e), c.pow(e));
    if (r.terms()[0].first.violates_invertibility()) throw NotInDomain("negative power of a non-invertible symbol");
    return r;
}
inline RatFunc ring_pow(const RatFunc& x, int e) { return x.pow(e); }
inline BigRational ring_pow(const BigRational& x, int e) { return x.pow(e); }

/// (a;q)_n in any ring.
template <class R>
R qpoch(const R& a, const R& q, int n) {
    R out(1), qk(1);
    for (int k = 0; k < n; ++k) {
        out *= R(1) - a * qk;
        qk *= q;
    }
    return out;
}

/// Row [n, k]_q for k = 0..n via the q-Pascal recurrence (no division).
template <class R>
std::vector<R> qbinom_row(int n, const R& q) {
    std::vector<R> row{R(1)};
    std::vector<R> qpow{R(1)};
    for (int i = 1; i <= n; ++i) qpow.push_back(qpow.back() * q);
    for (int m = 1; m <= n; ++m) {
        std::vector<R> next(static_cast<std::size_t>(m) + 1, R(0));
        next[0] = R(1);
        next[static_cast<std::size_t>(m)] = R(1);
        for (int k = 1; k < m; ++k)
            next[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k) - 1] + qpow[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
        row = std::move(next);
    }
    return row;
}

/// qpoch_finite for a scalar base.
RatFunc qpoch_finite(const RatFunc& base, int n);
/// qbinom_int: [n, k]_q, zero outside 0 <= k <= n.
RatFunc qbinom_int(int n, int k);
/// qbinom_generalized: (P^-1;q)_k/(q;q)_k (-1)^k P^k q^-binom(k,2) for a Laurent monomial P (q^alpha).
RatFunc qbinom_generalized(const MultiPoly& apower, int k);

// ---------------------------------------------------------------------------
// Series-valued products. The base is c * v^m with m a non-negative degree vector.

/// qpoch_finite with a base carrying an expansion variable.
template <class K>
TruncSeries<K> qpoch_series(const K& c, const Deg& m, const K& q, int n, const std::vector<Sym>& vars, int order) {
    TruncSeries<K> s = TruncSeries<K>::constant(vars, order, K(1));
    K ck = c;
    for (int k = 0; k < n; ++k) {
        s = s.mul_binomial(ck, m);
        ck *= q;
    }
    return s;
}

/// qpoch_infinite: sum_k (-1)^k q^binom(k,2) c^k v^(k m)/(q;q)_k.
template <class K>
TruncSeries<K> qpoch_infinite(const K& c, const Deg& m, const K& q, const std::vector<Sym>& vars, int order) {
    if (is_zero_deg(m)) throw MissingExpansionVar("infinite product of a scalar base is not a series");
    TruncSeries<K> s(vars, order);
    K term(1), qk(1);
    for (int k = 0; k * total(m) <= order; ++k) {
        s.at(scaled(m, k)) = term;
        // term_{k+1} = term_k * (-c q^k)/(1 - q^{k+1})
        term = term * (-(c * qk)) / (K(1) - qk * q);
        qk *= q;
    }
    return s;
}

/// 1/(c v^m;q)_inf = sum_k c^k v^(k m)/(q;q)_k.
template <class K>
TruncSeries<K> qpoch_infinite_inverse(const K& c, const Deg& m, const K& q, const std::vector<Sym>& vars, int order) {
    if (is_zero_deg(m)) throw MissingExpansionVar("infinite product of a scalar base is not a series");
    TruncSeries<K> s(vars, order);
    K term(1), qk(1);
    for (int k = 0; k * total(m) <= order; ++k) {
        s.at(scaled(m, k)) = term;
        qk *= q;
        term = term * c / (K(1) - qk);
    }
    return s;
}

/// (c v^m;q)_inf from the functional equation E(v) = (1 - c v^m) E(q v):
/// e_k (1 - q^k) = -c q^(k-1) e_(k-1). Independent of the closed-form sum.
template <class K>
TruncSeries<K> qpoch_infinite_by_recursion(const K& c, const Deg& m, const K& q, const std::vector<Sym>& vars,
                                           int order) {
    if (is_zero_deg(m)) throw MissingExpansionVar("infinite product of a scalar base is not a series");
    TruncSeries<K> s(vars, order);
    s.at(Deg{0, 0, 0}) = K(1);
    K prev(1);
    for (int k = 1; k * total(m) <= order; ++k) {
        const K qk1 = ring_pow(q, k - 1);
        const K e = -(c * qk1 * prev) / (K(1) - qk1 * q);
        s.at(scaled(m, k)) = e;
        prev = e;
    }
    return s;
}

/// qpoch_real_exponent: (c v^m;q)_alpha := (c v^m;q)_inf/(P c v^m;q)_inf with P = q^alpha.
template <class K>
TruncSeries<K> qpoch_real_exponent(const K& c, const Deg& m, const K& apower, const K& q, const std::vector<Sym>& vars,
                                   int order) {
    return qpoch_infinite(c, m, q, vars, order) * qpoch_infinite_inverse(apower * c, m, q, vars, order);
}

// ---------------------------------------------------------------------------
// Basic hypergeometric series.

/// Parameter c * v^m of an rPhis; m may be negative (all components of one
/// sign) for a scalar divided by expansion variables.
template <class K>
struct PhiParam {
    K coeff{0};
    Deg mono{0, 0, 0};
    bool zero = false;

    static PhiParam null() { return PhiParam{K(0), {0, 0, 0}, true}; }
    static PhiParam scalar(K c) { return PhiParam{std::move(c), {0, 0, 0}, false}; }
    static PhiParam with(K c, Deg m) { return PhiParam{std::move(c), m, false}; }
};

template <class K>
struct PhiSpec {
    std::vector<PhiParam<K>> upper;
    std::vector<PhiParam<K>> lower;
    PhiParam<K> argument;
    /// Set when an upper parameter is q^-m: only terms n <= m are summed.
    std::optional<int> terminates_after;

    /// Exponent 1 + s - r of the [(-1)^n q^binom(n,2)] factor.
    int extra_exponent() const { return 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size()); }
};

namespace detail {

inline int sign_class(const Deg& d) {
    bool pos = false, neg = false;
    for (int x : d) {
        pos = pos || x > 0;
        neg = neg || x < 0;
    }
    if (pos && neg) return 2;
    return neg ? -1 : (pos ? 1 : 0);
}

} // namespace detail

/// phi_formal: truncated series of the defining sum. Throws NotFormallySummable
/// when degree 0 would receive infinitely many terms or a parameter mixes
/// positive and negative powers of the expansion variables.
template <class K>
TruncSeries<K> phi_formal(const PhiSpec<K>& spec, const K& q, const std::vector<Sym>& vars, int order) {
    Deg step = spec.argument.mono;
    auto check = [](const PhiParam<K>& p) {
        if (!p.zero && detail::sign_class(p.mono) == 2)
            throw NotFormallySummable("parameter mixes positive and negative powers of expansion variables");
    };
    check(spec.argument);
    if (spec.argument.zero) return TruncSeries<K>::constant(vars, order, K(1));
    for (const auto& p : spec.upper) {
        check(p);
        if (!p.zero && detail::sign_class(p.mono) < 0) step = step + p.mono;
    }
    for (const auto& p : spec.lower) {
        check(p);
        if (!p.zero && detail::sign_class(p.mono) < 0) step = step - p.mono;
    }
    if (!nonnegative(step)) throw NotFormallySummable("terms acquire negative powers of expansion variables");
    int nmax;
    if (spec.terminates_after) {
        nmax = *spec.terminates_after;
    } else {
        if (total(step) <= 0) throw NotFormallySummable("every term contributes to degree 0");
        nmax = order / total(step);
    }
    const int e = spec.extra_exponent();

    TruncSeries<K> sum(vars, order);
    TruncSeries<K> unit = TruncSeries<K>::constant(vars, order, K(1)); // term_n / v^(n*step)
    K qn(1);                                                            // q^n
    for (int n = 0;; ++n) {
        if (total(scaled(step, n)) > order) break;
        sum += unit.shifted(scaled(step, n));
        if (n == nmax) break;
        // term_{n+1}/term_n
        K scalar = K(1);
        TruncSeries<K> next = unit;
        for (const auto& p : spec.upper) {
            if (p.zero) continue;
            const K cq = p.coeff * qn;
            const int cls = detail::sign_class(p.mono);
            if (cls == 0) scalar *= K(1) - cq;
            else if (cls > 0) next = next.mul_binomial(cq, p.mono);
            else { // (1 - cq/v^k) = (-cq/v^k)(1 - v^k/cq)
                scalar *= -cq;
                next = next.mul_binomial(K(1) / cq, Deg{0, 0, 0} - p.mono);
            }
        }
        for (const auto& p : spec.lower) {
            if (p.zero) continue;
            const K cq = p.coeff * qn;
            const int cls = detail::sign_class(p.mono);
            if (cls == 0) {
                const K d = K(1) - cq;
                if (is_zero_value(d)) throw DivisionByZero("lower parameter hits q^-n");
                scalar /= d;
            } else if (cls > 0) {
                next = next.div_binomial(cq, p.mono);
            } else {
                scalar /= -cq;
                next = next.div_binomial(K(1) / cq, Deg{0, 0, 0} - p.mono);
            }
        }
        scalar *= spec.argument.coeff / (K(1) - qn * q);
        for (int i = 0; i < e; ++i) scalar *= -qn;
        for (int i = 0; i < -e; ++i) scalar /= -qn;
        if (is_zero_value(scalar)) break;
        unit = next * scalar;
        qn *= q;
    }
    return sum;
}

} // namespace qident

#endif // QIDENT_QCORE_HPP
