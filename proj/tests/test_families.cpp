#include "doctest.h"

#include "qident/families.hpp"

using namespace qident;

namespace {
RatFunc R(Sym s, int e = 1) { return RatFunc::var(s, e); }
const RatFunc q = R(Sym::q), A = R(Sym::A), a = R(Sym::a), x = R(Sym::x), y = R(Sym::y), b = R(Sym::b);
const MultiPoly Aq = MultiPoly::var(Sym::A);

RatFunc sign(int k) { return RatFunc(k % 2 ? -1 : 1); }
RatFunc qp(int e) { return q.pow(e); }
RatFunc qfac(int n) { return qpoch_finite(q, n); }

// Literal defining sums, term by term in RatFunc arithmetic.
RatFunc lit_p(int n, const RatFunc& u, const RatFunc& v) {
    RatFunc out(1);
    for (int j = 0; j < n; ++j) out *= u - qp(j) * v;
    return out;
}
RatFunc lit_C3(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += sign(k) * qp(static_cast<int>(binom2(k))) * qbinom_generalized(Aq, k) * b.pow(k) * qfac(n) / qfac(n - k) *
               lit_p(n - k, x, y);
    return out;
}
RatFunc lit_D3(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += qp(static_cast<int>(binom2(k))) * qbinom_generalized(Aq, k) * b.pow(k) * qfac(n) / qfac(n - k) *
               sign(n + k) * qp(static_cast<int>(-binom2(n))) * lit_p(n - k, y, x);
    return out;
}
MultiPoly Aqn(int n) { return Aq * MultiPoly::var(Sym::q, n); }
RatFunc lit_caoniu_C(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += sign(k) * qp(static_cast<int>(binom2(k))) * qbinom_generalized(Aqn(n), k) * qfac(n) / qfac(n - k) *
               b.pow(k) * x.pow(n - k);
    return out;
}
RatFunc lit_caoniu_D(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += qp(k * k - n * k) * qbinom_generalized(Aqn(n), k) * qfac(n) / qfac(n - k) * b.pow(k) * x.pow(n - k);
    return out;
}
RatFunc lit_cigler_l(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += qbinom_generalized(Aqn(n), n - k) * qfac(n) / qfac(k) * sign(k) * qp(static_cast<int>(binom2(n - k))) *
               x.pow(n - k);
    return out * qp(-n * n) * A.pow(-n);
}
RatFunc lit_laguerre(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k)
        out += qp(static_cast<int>(binom2(k))) * qpoch_finite(qp(-n), k) / (qpoch_finite(A * q, k) * qfac(k)) *
               (x * qp(n + 1) * A).pow(k);
    return out * qpoch_finite(A * q, n) / qfac(n);
}
RatFunc lit_phi(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k) out += qbinom_int(n, k) * qpoch_finite(a, k) * x.pow(k);
    return out;
}
RatFunc lit_psi(int n) {
    RatFunc out(0);
    for (int k = 0; k <= n; ++k) out += qbinom_int(n, k) * qp(k * (k - n)) * qpoch_finite(a * qp(1 - k), k) * x.pow(k);
    return out;
}
} // namespace

TEST_CASE("family examples") {
    CHECK(cauchy_p(0) == MultiPoly(1));
    CHECK(cauchy_p(2).to_string() == "x^2 - (1+q)*x*y + q*y^2");
    CHECK(RatFunc(cigler_C3(1)) == x - y - (1 - A) * b);
    CHECK(RatFunc(cigler_D3(1)) == x - y + (1 - A) * b);
    CHECK(cigler_C3(0) == MultiPoly(1));
    CHECK(cigler_D3(0) == MultiPoly(1));
    CHECK(caoniu_C(0) == MultiPoly(1));
    CHECK(caoniu_D(0) == MultiPoly(1));
    CHECK(RatFunc(caoniu_C(1)) == x - (1 - A * q) * b);
    CHECK(RatFunc(hahn_phi(1)) == 1 + (1 - a) * x);
    CHECK(RatFunc(hahn_psi(1)) == 1 + (1 - a) * x);
    CHECK(hahn_phi(0) == MultiPoly(1));
    CHECK(hahn_psi(0) == MultiPoly(1));
    CHECK(qlaguerre_L(0) == RatFunc(1));
    CHECK(cigler_l(0) == MultiPoly(1));
    CHECK(qlaguerre_L(1) == (1 - A * q) / (1 - q) - A * q * x / (1 - q));
    for (int n = 0; n <= 6; ++n) {
        Assignment b0{{Sym::b, BigRational(0)}};
        CHECK(caoniu_C(n).partial_eval(b0) == MultiPoly::var(Sym::x, n));
        CHECK(caoniu_D(n).partial_eval(b0) == MultiPoly::var(Sym::x, n));
    }
}

TEST_CASE("families match their defining sums") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(RatFunc(cigler_C3(n)) == lit_C3(n));
        CHECK(RatFunc(cigler_D3(n)) == lit_D3(n));
        CHECK(RatFunc(caoniu_C(n)) == lit_caoniu_C(n));
        CHECK(RatFunc(caoniu_D(n)) == lit_caoniu_D(n));
        CHECK(RatFunc(cigler_l(n)) == lit_cigler_l(n));
        CHECK(qlaguerre_L(n) == lit_laguerre(n));
        CHECK(RatFunc(hahn_phi(n)) == lit_phi(n));
        CHECK(RatFunc(hahn_psi(n)) == lit_psi(n));
    }
}

TEST_CASE("structural properties") {
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        const MultiPoly c = cigler_C3(n), d = cigler_D3(n);
        int degc = 0, degd = 0;
        for (const auto& [m, v] : c.terms()) degc = std::max(degc, m[Sym::x] + m[Sym::y]);
        for (const auto& [m, v] : d.terms()) degd = std::max(degd, m[Sym::x] + m[Sym::y]);
        CHECK(degc == n);
        CHECK(degd == n);
        CHECK(c.collect(Sym::x)[n] == MultiPoly(1));
    }
    // y -> 0 in the trivariate family is the Cao-Niu family with alpha shifted by -n
    Assignment y0{{Sym::y, BigRational(0)}};
    for (int n = 0; n <= 5; ++n) {
        const MultiPoly A_shift = MultiPoly::var(Sym::A) * MultiPoly::var(Sym::q, -n);
        const MultiPoly X = MultiPoly::var(Sym::x), B = MultiPoly::var(Sym::b), Q = MultiPoly::var(Sym::q);
        CHECK(cigler_C3(n).partial_eval(y0) == caoniu_C<MultiPoly>(n, A_shift, X, B, Q));
        CHECK(cigler_D3(n).partial_eval(y0) == caoniu_D<MultiPoly>(n, A_shift, X, B, Q));
    }
    // Cigler l_n is the Cao-Niu C_n at x = 1, b = x up to (-1)^n q^(n^2) A^n
    for (int n = 0; n <= 5; ++n) {
        const RatFunc c = RatFunc(caoniu_C(n)).substitute(Sym::x, RatFunc(1)).substitute(Sym::b, x);
        CHECK(c == sign(n) * qp(n * n) * A.pow(n) * RatFunc(cigler_l(n)));
    }
    // Generating function of the Cauchy polynomials
    const std::vector<Sym> T{Sym::t};
    auto gen = qpoch_infinite(y, Deg{1, 0, 0}, q, T, 10) * qpoch_infinite_inverse(x, Deg{1, 0, 0}, q, T, 10);
    for (int n = 0; n <= 10; ++n) CHECK(gen.coeff({n, 0, 0}) == RatFunc(cauchy_p(n)) / qfac(n));
}

TEST_CASE("evaluation over the rationals agrees with the symbolic families") {
    Assignment at{{Sym::q, BigRational(1, 2)}, {Sym::A, BigRational(3, 4)}, {Sym::x, BigRational(1, 3)},
                  {Sym::y, BigRational(-2, 5)}, {Sym::b, BigRational(7, 8)}, {Sym::a, BigRational(5, 16)}};
    const BigRational Q = at.at(Sym::q), Av = at.at(Sym::A), X = at.at(Sym::x), Y = at.at(Sym::y), Bv = at.at(Sym::b),
                      a_ = at.at(Sym::a);
    for (int n = 0; n <= 6; ++n) {
        CHECK(cigler_C3<BigRational>(n, Av, X, Y, Bv, Q) == cigler_C3(n).eval(at));
        CHECK(cigler_D3<BigRational>(n, Av, X, Y, Bv, Q) == cigler_D3(n).eval(at));
        CHECK(hahn_psi<BigRational>(n, a_, X, Q) == hahn_psi(n).eval(at));
        CHECK(qlaguerre_L<BigRational>(n, Av, X, Q) == qlaguerre_L(n).eval(at));
    }
}

TEST_CASE("expand_family") {
    CHECK(expand_family("cigler_C3", 1).to_string() == RatFunc(cigler_C3(1)).to_string());
    CHECK(expand_family("hahn_phi", 0).to_string() == "1");
    CHECK_THROWS_AS(expand_family("nope", 1), SymbolError);
}
