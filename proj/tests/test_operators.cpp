#include "doctest.h"

#include "qident/families.hpp"
#include "qident/operators.hpp"

using namespace qident;

namespace {
RatFunc R(Sym s, int e = 1) { return RatFunc::var(s, e); }
const RatFunc q = R(Sym::q), A = R(Sym::A), x = R(Sym::x), y = R(Sym::y), b = R(Sym::b), z = R(Sym::z),
              s = R(Sym::s);
const std::vector<Sym> T{Sym::t};
const std::vector<Sym> S{Sym::s};
constexpr Deg u1{1, 0, 0};
RatFunc P(int n) { return RatFunc(cauchy_p(n)); }
RatFunc Pyx(int n) { return RatFunc(cauchy_p(n, Sym::y, Sym::x)); }
} // namespace

TEST_CASE("D and theta examples") {
    const MultiPoly X = MultiPoly::var(Sym::x), Q = MultiPoly::var(Sym::q);
    CHECK(apply_D(cauchy_p(1)) == 1 - Q);
    CHECK(apply_D(cauchy_p(2)) == (1 - Q * Q) * cauchy_p(1));
    CHECK_THROWS_AS(apply_D(X), NotInDomain);
    CHECK(apply_theta(cauchy_p(1, Sym::y, Sym::x)) == -(1 - Q));
    CHECK(apply_theta(MultiPoly(1)) == MultiPoly());
    CHECK(apply_D(MultiPoly(1)) == MultiPoly());
    CHECK_THROWS_AS(apply_D(P(1) / (1 - x)), NotInDomain);
}

TEST_CASE("degree lowering") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(apply_D(cauchy_p(n)) == (1 - MultiPoly::var(Sym::q, n)) * cauchy_p(n - 1));
        CHECK(RatFunc(apply_theta(cauchy_p(n, Sym::y, Sym::x))) ==
              -(1 - q.pow(n)) * Pyx(n - 1));
    }
}

TEST_CASE("linearity") {
    const RatFunc c1 = A / (1 - q), c2 = (1 + b) / (1 - q * q * A);
    for (int n = 1; n <= 5; ++n) {
        CHECK(apply_D(c1 * P(n) + c2 * P(n - 1)) == c1 * apply_D(P(n)) + c2 * apply_D(P(n - 1)));
        CHECK(apply_theta(c1 * Pyx(n) + c2 * Pyx(n + 1)) == c1 * apply_theta(Pyx(n)) + c2 * apply_theta(Pyx(n + 1)));
    }
}

TEST_CASE("T and E") {
    const RatFunc Ainv = A.pow(-1);
    CHECK(apply_T(Ainv, b * A, P(1)) == x - y - (1 - A) * b);
    CHECK(apply_E(Ainv, b * A, -Pyx(1)) == x - y + (1 - A) * b);
    CHECK(apply_T(A, RatFunc(0), P(3)) == P(3));
    CHECK(apply_E(A, RatFunc(0), Pyx(3)) == Pyx(3));
    CHECK_THROWS_AS(apply_T(Ainv, b * A, P(3), 1), KMaxTooSmall);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(apply_T(Ainv, b * A, P(n)) == RatFunc(cigler_C3(n)));
        RatFunc pre = q.pow(static_cast<int>(-binom2(n))) * (n % 2 ? -1 : 1);
        CHECK(apply_E(Ainv, b * A, pre * Pyx(n)) == RatFunc(cigler_D3(n)));
    }
}

TEST_CASE("T and E on product quotients") {
    const int N = 8;
    const RatFunc Ainv = A.pow(-1);
    auto lhs1 = apply_T(Ainv, A * z, qpoch_infinite(y, u1, q, T, N) * qpoch_infinite_inverse(x, u1, q, T, N));
    auto rhs1 = qpoch_infinite(y, u1, q, T, N) * qpoch_infinite(z, u1, q, T, N) *
                qpoch_infinite_inverse(x, u1, q, T, N) * qpoch_infinite_inverse(A * z, u1, q, T, N);
    CHECK(lhs1 == rhs1);
    auto lhs2 = apply_E(Ainv, A * z, qpoch_infinite(x, u1, q, T, N) * qpoch_infinite_inverse(y, u1, q, T, N));
    auto rhs2 = qpoch_infinite(x, u1, q, T, N) * qpoch_infinite(z, u1, q, T, N) *
                qpoch_infinite_inverse(y, u1, q, T, N) * qpoch_infinite_inverse(A * z, u1, q, T, N);
    CHECK(lhs2 == rhs2);
}

TEST_CASE("T on Cauchy polynomials times products") {
    const int N = 6;
    const RatFunc Ainv = A.pow(-1);
    for (int n = 0; n <= 3; ++n) {
        CAPTURE(n);
        // p_n(x,y) (y s q^n;q)_inf/(xs;q)_inf, times s^n
        auto target = qpoch_infinite(y * q.pow(n), u1, q, S, N) * qpoch_infinite_inverse(x, u1, q, S, N) * P(n);
        auto lhs = apply_T(Ainv, b, target).shifted({n, 0, 0});
        PhiSpec<RatFunc> spec{{PhiParam<RatFunc>::scalar(q.pow(-n)), PhiParam<RatFunc>::with(x, u1),
                               PhiParam<RatFunc>::with(b, u1)},
                              {PhiParam<RatFunc>::with(y, u1), PhiParam<RatFunc>::with(b * Ainv, u1)},
                              PhiParam<RatFunc>::scalar(q),
                              n};
        auto rhs = qpoch_infinite(y, u1, q, S, N) * qpoch_infinite(b * Ainv, u1, q, S, N) *
                   qpoch_infinite_inverse(x, u1, q, S, N) * qpoch_infinite_inverse(b, u1, q, S, N) *
                   phi_formal(spec, q, S, N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operators with a rational q") {
    OperatorVars v{Sym::x, Sym::y, BigRational(1, 3)};
    Assignment at{{Sym::q, BigRational(1, 3)}};
    for (int n = 1; n <= 5; ++n) {
        const MultiPoly p = cauchy_p(n).partial_eval(at);
        CHECK(apply_D(p, v) == (cauchy_p(n - 1) * (1 - MultiPoly::var(Sym::q, n))).partial_eval(at));
        const RatFunc Ainv = A.pow(-1);
        CHECK(apply_T(Ainv, b * A, RatFunc(p), -1, v) == RatFunc(cigler_C3(n)).partial_eval(at));
    }
}
