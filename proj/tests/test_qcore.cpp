#include "doctest.h"

#include "qident/qcore.hpp"

using namespace qident;

namespace {
RatFunc R(Sym s, int e = 1) { return RatFunc::var(s, e); }
const RatFunc q = R(Sym::q), A = R(Sym::A), a = R(Sym::a), c = R(Sym::c), z = R(Sym::z);
const std::vector<Sym> T{Sym::t};
constexpr Deg t1{1, 0, 0};
} // namespace

TEST_CASE("qpoch_finite") {
    CHECK(qpoch_finite(A, 0) == RatFunc(1));
    CHECK(qpoch_finite(A, 2) == (1 - A) * (1 - A * q));
    CHECK(qpoch_finite(A / q, 1) == qpoch_finite(q / A, 1) * (-A) * q.pow(-1));
}

TEST_CASE("relation for (a q^-n;q)_n") {
    for (int n = 0; n <= 10; ++n)
        CHECK(qpoch_finite(a * q.pow(-n), n) ==
              qpoch_finite(q / a, n) * (-a).pow(n) * q.pow(static_cast<int>(-n - binom2(n))));
}

TEST_CASE("q-binomials") {
    CHECK(qbinom_int(2, 1) == RatFunc(1 + q));
    CHECK(qbinom_int(5, 0) == RatFunc(1));
    CHECK(qbinom_int(3, 1) == 1 + q + q * q);
    CHECK(qbinom_int(3, 4) == RatFunc(0));
    CHECK(qbinom_generalized(MultiPoly::var(Sym::A), 0) == RatFunc(1));
    CHECK(qbinom_generalized(MultiPoly::var(Sym::A), 1) == (1 - A) / (1 - q));
    CHECK(qbinom_generalized(MultiPoly::var(Sym::q, 3), 2) == 1 + q + q * q);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(qbinom_generalized(MultiPoly::var(Sym::q, n), k) == qbinom_int(n, k));
}

TEST_CASE("infinite products") {
    auto e = qpoch_infinite(RatFunc(1), t1, q, T, 2);
    CHECK(e.coeff({0, 0, 0}) == RatFunc(1));
    CHECK(e.coeff({1, 0, 0}) == -1 / (1 - q));
    CHECK(e.coeff({2, 0, 0}) == q / ((1 - q) * (1 - q * q)));
    CHECK(qpoch_infinite(RatFunc(0), t1, q, T, 3) == TruncSeries<RatFunc>::constant(T, 3, 1));
    CHECK_THROWS_AS(qpoch_infinite(RatFunc(1), Deg{0, 0, 0}, q, T, 3), MissingExpansionVar);

    for (int order : {1, 3, 5, 8}) {
        auto inv = qpoch_infinite_inverse(RatFunc(1), t1, q, T, order);
        CHECK(qpoch_infinite(RatFunc(1), t1, q, T, order) * inv == TruncSeries<RatFunc>::constant(T, order, 1));
        CHECK(qpoch_infinite(RatFunc(1), t1, q, T, order).reciprocal() == inv);
        CHECK(qpoch_infinite_by_recursion(z, t1, q, T, order) == qpoch_infinite(z, t1, q, T, order));
    }
    CHECK(qpoch_infinite_inverse(RatFunc(1), t1, q, T, 3).coeff(t1) == 1 / (1 - q));

    const RatFunc x = R(Sym::x), y = R(Sym::y);
    auto gen = qpoch_infinite(y, t1, q, T, 4) * qpoch_infinite_inverse(x, t1, q, T, 4);
    for (int n = 0; n <= 4; ++n) {
        RatFunc p(1);
        for (int j = 0; j < n; ++j) p *= x - q.pow(j) * y;
        CHECK(gen.coeff({n, 0, 0}) == p / qpoch_finite(q, n));
    }
}

TEST_CASE("real exponent") {
    const RatFunc b = R(Sym::b);
    CHECK(qpoch_real_exponent(b, t1, RatFunc(1), q, T, 4) == TruncSeries<RatFunc>::constant(T, 4, 1));
    auto s = qpoch_real_exponent(b, t1, A, q, T, 3);
    CHECK(s.coeff(t1) == -b * (1 - A) / (1 - q));
    auto one = qpoch_real_exponent(b, t1, q, q, T, 3);
    CHECK(one == TruncSeries<RatFunc>::monomial(T, 3, {0, 0, 0}, 1) - TruncSeries<RatFunc>::monomial(T, 3, t1, b));
}

TEST_CASE("phi_formal") {
    // 1phi0[A; -; q; z t]
    PhiSpec<RatFunc> putt{{PhiParam<RatFunc>::scalar(A)}, {}, PhiParam<RatFunc>::with(z, t1), std::nullopt};
    auto s = phi_formal(putt, q, T, 3);
    for (int n = 0; n <= 3; ++n) CHECK(s.coeff({n, 0, 0}) == qpoch_finite(A, n) / qpoch_finite(q, n) * z.pow(n));
    CHECK(s == qpoch_infinite(A * z, t1, q, T, 3) * qpoch_infinite_inverse(z, t1, q, T, 3));

    // q-Chu-Vandermonde
    for (int n = 0; n <= 12; ++n) {
        PhiSpec<RatFunc> male{{PhiParam<RatFunc>::scalar(q.pow(-n)), PhiParam<RatFunc>::scalar(a)},
                              {PhiParam<RatFunc>::scalar(c)},
                              PhiParam<RatFunc>::scalar(c * q.pow(n) / a),
                              n};
        auto v = phi_formal(male, q, {}, 0).coeff({0, 0, 0});
        CHECK(v == qpoch_finite(c / a, n) / qpoch_finite(c, n));
    }

    // zero parameters and the extra (-1)^n q^binom(n,2) factor
    PhiSpec<RatFunc> zeros{{PhiParam<RatFunc>::scalar(A), PhiParam<RatFunc>::null(), PhiParam<RatFunc>::null()},
                           {PhiParam<RatFunc>::scalar(z), PhiParam<RatFunc>::null()},
                           PhiParam<RatFunc>::with(RatFunc(1), t1),
                           std::nullopt};
    auto zs = phi_formal(zeros, q, T, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(zs.coeff({n, 0, 0}) == qpoch_finite(A, n) / (qpoch_finite(z, n) * qpoch_finite(q, n)));
    PhiSpec<RatFunc> euler{{}, {}, PhiParam<RatFunc>::with(RatFunc(1), t1), std::nullopt};
    CHECK(phi_formal(euler, q, T, 6) == qpoch_infinite(RatFunc(1), t1, q, T, 6));

    // A parameter 1/t balanced by the argument
    PhiSpec<RatFunc> neg{{PhiParam<RatFunc>::with(z, Deg{-1, 0, 0})}, {}, PhiParam<RatFunc>::with(a, Deg{2, 0, 0}),
                         std::nullopt};
    auto ns = phi_formal(neg, q, T, 4);
    RatFunc c1 = (-z) * a; // (1 - z/t) a t^2 / (1-q) -> -z a t/(1-q) + a t^2/(1-q)
    CHECK(ns.coeff(t1) == c1 / (1 - q));

    PhiSpec<RatFunc> bad{{PhiParam<RatFunc>::scalar(A)}, {}, PhiParam<RatFunc>::scalar(z), std::nullopt};
    CHECK_THROWS_AS(phi_formal(bad, q, T, 3), NotFormallySummable);
    PhiSpec<RatFunc> mixed{{PhiParam<RatFunc>::with(A, Deg{1, -1, 0})}, {}, PhiParam<RatFunc>::with(z, t1),
                           std::nullopt};
    CHECK_THROWS_AS(phi_formal(mixed, q, {Sym::t, Sym::s}, 3), NotFormallySummable);
}

TEST_CASE("rational coefficients agree with evaluated symbolic ones") {
    Assignment at{{Sym::q, BigRational(1, 3)}, {Sym::A, BigRational(2, 7)}, {Sym::z, BigRational(-5, 4)}};
    PhiSpec<RatFunc> sym{{PhiParam<RatFunc>::scalar(A)}, {}, PhiParam<RatFunc>::with(z, t1), std::nullopt};
    PhiSpec<BigRational> num{{PhiParam<BigRational>::scalar(BigRational(2, 7))}, {},
                             PhiParam<BigRational>::with(BigRational(-5, 4), t1), std::nullopt};
    auto s = phi_formal(sym, q, T, 5);
    auto n = phi_formal(num, BigRational(1, 3), T, 5);
    for (int k = 0; k <= 5; ++k) CHECK(s.coeff({k, 0, 0}).eval(at) == n.coeff({k, 0, 0}));
}
