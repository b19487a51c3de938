#ifndef QIDENT_FAMILIES_HPP
#define QIDENT_FAMILIES_HPP

#include <string>
#include <vector>

#include "qident/qcore.hpp"

namespace qident {

// Every family is a template over the ring R (MultiPoly, RatFunc or
// BigRational) taking the values of its parameters; q must be invertible in R.

/// Cauchy polynomial p_n(x,y) = prod_{j<n} (x - q^j y).
template <class R>
R cauchy_p(int n, const R& x, const R& y, const R& q) {
    R out(1), qj(1);
    for (int j = 0; j < n; ++j) {
        out *= x - qj * y;
        qj *= q;
    }
    return out;
}

namespace detail {

/// prod_{j<k} (P - q^j) for k = 0..n.
template <class R>
std::vector<R> shifted_products(int n, const R& apower, const R& q) {
    std::vector<R> out{R(1)};
    R qj(1);
    for (int j = 0; j < n; ++j) {
        out.push_back(out.back() * (apower - qj));
        qj *= q;
    }
    return out;
}

} // namespace detail

/// C_n^(alpha-n)(x,y,b) = sum_k prod_{j<k}(A - q^j) [n,k]_q b^k p_{n-k}(x,y),
/// the defining sum after (-1)^k q^binom(k,2) [alpha,k]_q (q;q)_n/(q;q)_{n-k}
/// is cleared of denominators.
template <class R>
R cigler_C3(int n, const R& A, const R& x, const R& y, const R& b, const R& q) {
    const auto binom = qbinom_row(n, q);
    const auto prods = detail::shifted_products(n, A, q);
    R out(0), bk(1);
    for (int k = 0; k <= n; ++k) {
        out += prods[static_cast<std::size_t>(k)] * binom[static_cast<std::size_t>(k)] * bk * cauchy_p(n - k, x, y, q);
        bk *= b;
    }
    return out;
}

/// D_n^(alpha-n)(x,y,b) = (-1)^n q^-binom(n,2) sum_k prod_{j<k}(A - q^j) [n,k]_q b^k p_{n-k}(y,x).
template <class R>
R cigler_D3(int n, const R& A, const R& x, const R& y, const R& b, const R& q) {
    const auto binom = qbinom_row(n, q);
    const auto prods = detail::shifted_products(n, A, q);
    R out(0), bk(1);
    for (int k = 0; k <= n; ++k) {
        out += prods[static_cast<std::size_t>(k)] * binom[static_cast<std::size_t>(k)] * bk * cauchy_p(n - k, y, x, q);
        bk *= b;
    }
    R pre = ring_pow(q, static_cast<int>(-binom2(n)));
    if (n % 2) pre = -pre;
    return pre * out;
}

/// Cao-Niu C_n^(alpha)(x,b) with the generalized binomial [n+alpha, k]_q (A q^n
/// standing for q^(n+alpha)) and the factor (q;q)_n/(q;q)_{n-k}.
template <class R>
R caoniu_C(int n, const R& A, const R& x, const R& b, const R& q) {
    const auto binom = qbinom_row(n, q);
    const auto prods = detail::shifted_products(n, A * ring_pow(q, n), q);
    R out(0), bk(1);
    for (int k = 0; k <= n; ++k) {
        out += prods[static_cast<std::size_t>(k)] * binom[static_cast<std::size_t>(k)] * bk * ring_pow(x, n - k);
        bk *= b;
    }
    return out;
}

/// Cao-Niu D_n^(alpha)(x,b): sum_k q^(k^2-nk) [n+alpha, k]_q (q;q)_n/(q;q)_{n-k} b^k x^(n-k).
template <class R>
R caoniu_D(int n, const R& A, const R& x, const R& b, const R& q) {
    const auto binom = qbinom_row(n, q);
    const auto prods = detail::shifted_products(n, A * ring_pow(q, n), q);
    R out(0), bk(1);
    for (int k = 0; k <= n; ++k) {
        R term = prods[static_cast<std::size_t>(k)] * binom[static_cast<std::size_t>(k)] * bk * ring_pow(x, n - k) *
                 ring_pow(q, static_cast<int>(static_cast<long>(k) * k - static_cast<long>(n) * k - binom2(k)));
        if (k % 2) term = -term;
        out += term;
        bk *= b;
    }
    return out;
}

/// Cigler l_n^(alpha)(x) = (-1)^n q^-(n^2) A^-n sum_m prod_{j<m}(A q^n - q^j) [n,m]_q x^m.
template <class R>
R cigler_l(int n, const R& A, const R& x, const R& q) {
    const auto binom = qbinom_row(n, q);
    const auto prods = detail::shifted_products(n, A * ring_pow(q, n), q);
    R out(0), xm(1);
    for (int m = 0; m <= n; ++m) {
        out += prods[static_cast<std::size_t>(m)] * binom[static_cast<std::size_t>(m)] * xm;
        xm *= x;
    }
    R pre = ring_pow(q, -n * n) * ring_pow(A, -n);
    if (n % 2) pre = -pre;
    return pre * out;
}

/// q-Laguerre L_n^(alpha)(x;q) = (q;q)_n^-1 sum_k [n,k]_q (A q^(k+1);q)_{n-k} (-1)^k q^(k^2) A^k x^k.
/// Needs a field (RatFunc or BigRational).
template <class K>
K qlaguerre_L(int n, const K& A, const K& x, const K& q) {
    const auto binom = qbinom_row(n, q);
    K out(0);
    for (int k = 0; k <= n; ++k) {
        K term = binom[static_cast<std::size_t>(k)] * qpoch(A * ring_pow(q, k + 1), q, n - k) * ring_pow(q, k * k) *
                 ring_pow(A, k) * ring_pow(x, k);
        if (k % 2) term = -term;
        out += term;
    }
    return out / qpoch(q, q, n);
}

/// Hahn (Al-Salam-Carlitz) phi_n^(a)(x|q) = sum_k [n,k]_q (a;q)_k x^k.
template <class R>
R hahn_phi(int n, const R& a, const R& x, const R& q) {
    const auto binom = qbinom_row(n, q);
    R out(0), xk(1);
    for (int k = 0; k <= n; ++k) {
        out += binom[static_cast<std::size_t>(k)] * qpoch(a, q, k) * xk;
        xk *= x;
    }
    return out;
}

/// psi_n^(a)(x|q) = sum_k [n,k]_q q^(k(k-n)) (a q^(1-k);q)_k x^k.
template <class R>
R hahn_psi(int n, const R& a, const R& x, const R& q) {
    const auto binom = qbinom_row(n, q);
    R out(0), xk(1);
    for (int k = 0; k <= n; ++k) {
        out += binom[static_cast<std::size_t>(k)] * ring_pow(q, k * (k - n)) * qpoch(a * ring_pow(q, 1 - k), q, k) * xk;
        xk *= x;
    }
    return out;
}

// Symbolic constructors in the standard symbols.
MultiPoly cauchy_p(int n, Sym x = Sym::x, Sym y = Sym::y);
MultiPoly cigler_C3(int n, Sym x = Sym::x, Sym y = Sym::y, Sym b = Sym::b, Sym A = Sym::A);
MultiPoly cigler_D3(int n, Sym x = Sym::x, Sym y = Sym::y, Sym b = Sym::b, Sym A = Sym::A);
MultiPoly caoniu_C(int n, Sym x = Sym::x, Sym b = Sym::b, Sym A = Sym::A);
MultiPoly caoniu_D(int n, Sym x = Sym::x, Sym b = Sym::b, Sym A = Sym::A);
MultiPoly cigler_l(int n, Sym x = Sym::x, Sym A = Sym::A);
RatFunc qlaguerre_L(int n, Sym x = Sym::x, Sym A = Sym::A);
MultiPoly hahn_phi(int n, Sym a = Sym::a, Sym x = Sym::x);
MultiPoly hahn_psi(int n, Sym a = Sym::a, Sym x = Sym::x);

enum class Family { cauchy_p, cauchy_p_yx, cigler_C3, cigler_D3, caoniu_C, caoniu_D, cigler_l, hahn_phi, hahn_psi };
/// Memoized symbolic family in the standard symbols (cauchy_p_yx is p_n(y,x)).
/// Safe to call from concurrent workers.
const MultiPoly& family_poly(Family f, int n);

/// Family tags accepted by `expand`.
const std::vector<std::string>& family_names();
/// Expands a family by tag; throws SymbolError on unknown tags.
RatFunc expand_family(const std::string& tag, int n);

} // namespace qident

#endif // QIDENT_FAMILIES_HPP
