#include "doctest.h"

#include "qident/numeric.hpp"

using namespace qident;

namespace {
const BigRational half(1, 2), quarter(1, 4);
NumericConfig cfg() { return NumericConfig{}; }
bool within(const BigRational& a, const BigRational& b, const BigRational& tol) { return abs(a - b) <= tol; }
} // namespace

TEST_CASE("balls") {
    Ball a(BigRational(1, 3), BigRational(1, 100)), b(BigRational(2), BigRational(1, 1000));
    Ball p = a * b;
    CHECK(p.mid == BigRational(2, 3));
    CHECK(p.rad >= BigRational(2, 100));
    CHECK_THROWS_AS(Ball(BigRational(1, 100), BigRational(1, 50)).inverse(), DivisionByZero);
    Ball r = Ball(BigRational(1, 3)).rounded(80);
    CHECK(within(r.mid, BigRational(1, 3), r.rad));
    CHECK(r.rad < BigRational(2).pow(-78));
}

TEST_CASE("infinite product balls") {
    const BigRational target = pow10_neg(30);
    Ball p = qpoch_inf_ball(quarter, half, target);
    Ball inv = qpoch_inf_inverse_ball(quarter, half, target);
    CHECK(p.rad <= target);
    CHECK(inv.rad <= target);
    // product times inverse contains 1
    Ball one = p * inv;
    CHECK(within(one.mid, BigRational(1), one.rad));
    CHECK(qpoch_inf_ball(BigRational(4), half, target).mid == BigRational(0)); // 1 - 4 q^2 = 0
    CHECK_THROWS_AS(qpoch_inf_inverse_ball(BigRational(4), half, target), DivisionByZero);
    CHECK_THROWS_AS(qpoch_inf_ball(quarter, BigRational(2), target), DomainViolation);
}

TEST_CASE("phi_numeric") {
    PhiSpec<BigRational> trivial{{PhiParam<BigRational>::scalar(quarter)}, {}, PhiParam<BigRational>::null(), {}};
    auto t = phi_numeric(trivial, half, cfg());
    CHECK(t.value == BigRational(1));
    CHECK(t.tail == BigRational(0));

    // 1phi0[0;-;q;z] = 1/(z;q)_inf
    PhiSpec<BigRational> e{{PhiParam<BigRational>::null()}, {}, PhiParam<BigRational>::scalar(quarter), {}};
    auto v = phi_numeric(e, half, cfg());
    Ball inv = qpoch_inf_inverse_ball(quarter, half, pow10_neg(30));
    CHECK(v.tail <= pow10_neg(30));
    CHECK(within(v.value, inv.mid, v.tail + inv.rad));

    // terminating 2phi1[q^-3, a; c; q; c q^3/a]
    const BigRational a(3, 8), c(5, 16), q = half;
    PhiSpec<BigRational> term{{PhiParam<BigRational>::scalar(q.pow(-3)), PhiParam<BigRational>::scalar(a)},
                              {PhiParam<BigRational>::scalar(c)},
                              PhiParam<BigRational>::scalar(c * q.pow(3) / a),
                              3};
    auto tv = phi_numeric(term, q, cfg());
    CHECK(tv.tail == BigRational(0));
    CHECK(tv.value == qpoch(c / a, q, 3) / qpoch(c, q, 3));

    // the ratio bound interval contains the formal evaluation
    PhiSpec<BigRational> g{{PhiParam<BigRational>::scalar(a), PhiParam<BigRational>::scalar(BigRational(-7, 8))},
                           {PhiParam<BigRational>::scalar(c)},
                           PhiParam<BigRational>::scalar(BigRational(3, 16)),
                           {}};
    auto gv = phi_numeric(g, q, cfg());
    CHECK_THROWS_AS(phi_formal(g, q, {}, 0), NotFormallySummable);
    CHECK(gv.tail > BigRational(0));
    NumericConfig strict;
    strict.tail_target = pow10_neg(45);
    auto gs = phi_numeric(g, q, strict);
    CHECK(within(gv.value, gs.value, gv.tail + gs.tail));

    PhiSpec<BigRational> div{{PhiParam<BigRational>::scalar(a), PhiParam<BigRational>::scalar(a),
                              PhiParam<BigRational>::scalar(a)},
                             {},
                             PhiParam<BigRational>::scalar(quarter),
                             {}};
    NumericConfig small;
    small.kmax = 200;
    CHECK_THROWS_AS(phi_numeric(div, q, small), TailNotBounded);
}

TEST_CASE("empirical sums") {
    auto geo = sum_empirical([](int n) { return BigRational(1, 3).pow(n); }, cfg());
    CHECK(within(geo.value, BigRational(3, 2), geo.tail + pow10_neg(30)));
    NumericConfig small;
    small.kmax = 100;
    CHECK_THROWS_AS(sum_empirical([](int n) { return BigRational(n + 1); }, small), TailNotBounded);
}
