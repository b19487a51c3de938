#include "qident/qcore.hpp"

namespace qident {

RatFunc qpoch_finite(const RatFunc& base, int n) {
    if (n < 0) throw NotInDomain("negative length of a q-shifted factorial");
    const RatFunc q = RatFunc::var(Sym::q);
    if (base.is_polynomial()) {
        // Keep the factors separate so the result factors cleanly when inverted.
        return RatFunc(qpoch(base.num(), MultiPoly::var(Sym::q), n));
    }
    return qpoch(base, q, n);
}

RatFunc qbinom_int(int n, int k) {
    if (k < 0 || k > n || n < 0) return RatFunc(0);
    return RatFunc(qbinom_row(n, MultiPoly::var(Sym::q))[static_cast<std::size_t>(k)]);
}

RatFunc qbinom_generalized(const MultiPoly& apower, int k) {
    if (k < 0) return RatFunc(0);
    if (!apower.is_monomial()) throw NotInDomain("q^alpha must be a Laurent monomial");
    // (P^-1;q)_k (-1)^k P^k = prod_{j<k} (q^j - P)
    const MultiPoly q = MultiPoly::var(Sym::q);
    MultiPoly num(1);
    for (int j = 0; j < k; ++j) num *= ring_pow(q, j) - apower;
    num *= ring_pow(q, static_cast<int>(-binom2(k)));
    return RatFunc::fraction(num, qpoch(q, q, k));
}

} // namespace qident
