#include <set>

#include "doctest.h"

#include "qident/spec_parse.hpp"
#include "qident/verify.hpp"

using namespace qident;

namespace {

RunOptions quick() {
    RunOptions o;
    o.order = 4;
    o.points = 2;
    return o;
}

} // namespace

TEST_CASE("registry contents and modes") {
    const auto& reg = registry();
    CHECK(reg.size() >= 34);
    std::set<std::string> ids;
    for (const auto& c : reg) ids.insert(c.id);
    CHECK(ids.size() == reg.size());
    for (const char* id : {"usu", "qbinom-spec", "gener", "putt", "euler", "euler-inv", "male", "tO1", "tO2", "bella",
                           "tbella", "check1-rep", "check2-rep", "ler", "lerr", "gs", "cc1sums", "21sums", "2sdss"}) {
        CAPTURE(id);
        CHECK(find_check(id).mode == Mode::Formal);
    }
    for (const char* id : {"exgen", "2exgen", "gextend", "2gextend", "1sums", "2sums", "1s", "2s", "c1sums", "1ss",
                           "2ss", "1sdss"}) {
        CAPTURE(id);
        CHECK(find_check(id).mode == Mode::Analytic);
    }
    for (int s = 0; s <= 3; ++s) {
        CHECK(find_check("exdddgen-s" + std::to_string(s)).mode == Mode::Formal);
        CHECK(find_check("sexdddgen-s" + std::to_string(s)).mode == Mode::Formal);
    }
    CHECK(find_check("exgen").rhs_not_formal);
    CHECK_FALSE(find_check("c1sums").rhs_not_formal);
    for (const auto& c : reg) {
        CAPTURE(c.id);
        if (c.rhs_not_formal) CHECK(c.mode == Mode::Analytic);
        if (c.mode == Mode::Analytic) {
            CHECK_FALSE(c.constraints.empty());
            CHECK(c.sampler);
        } else {
            CHECK(c.lhs_sym);
        }
        CHECK_FALSE(c.mutations.empty());
    }
    CHECK_THROWS_AS(find_check("nope"), ConfigError);
}

TEST_CASE("suite selection") {
    CHECK(select_checks("exdddgen").size() == 4);
    CHECK(select_checks("reductions").size() == 4);
    CHECK(select_checks("ler,gener,ler").size() == 2);
    const auto analytic = select_checks("analytic");
    CHECK(analytic.size() == 12);
    for (const auto* c : analytic) CHECK(c->mode == Mode::Analytic);
    CHECK_THROWS_AS(select_checks("ler,bogus"), ConfigError);
}

TEST_CASE("every formal entry passes at low order") {
    for (const auto& c : registry()) {
        if (c.mode == Mode::Analytic) continue;
        CAPTURE(c.id);
        const CheckReport r = run_formal(c, 2, false, 0);
        CHECK(r.status == Status::Pass);
        CHECK(r.witness.is_null());
    }
}

TEST_CASE("formal examples") {
    CHECK(run_formal(find_check("ler"), 6, false, 0).status == Status::Pass);
    CHECK(run_formal(find_check("gener"), 10, false, 0).status == Status::Pass);
    CHECK(run_formal(find_check("reduction-a"), 6, false, 0).status == Status::Pass);
    CHECK(run_formal(find_check("reduction-b"), 6, false, 0).status == Status::Pass);
    CHECK(run_formal(find_check("male"), 12, true, 3).status == Status::Pass);
}

TEST_CASE("corrupted right-hand side fails at t^1") {
    const Mutation m{Mutation::Kind::Scale, Sym::b};
    const CheckReport r = run_formal(find_check("ler"), 6, false, 0, &m);
    REQUIRE(r.status == Status::Fail);
    CHECK(r.witness.at("coefficient") == "t");
    CHECK(r.witness.at("degree") == 1);
    CHECK(r.mutation == "b -> 2b");
    const CheckReport s = run_formal(find_check("ler"), 6, true, 11, &m);
    CHECK(s.status == Status::Fail);
}

TEST_CASE("mutation catalog detects corrupted formal entries") {
    for (const char* id : {"usu", "gener", "tO1", "check1-rep"}) {
        CAPTURE(id);
        const MutationResult m = mutation_witness(find_check(id), quick());
        CHECK(m.flips());
        REQUIRE(m.witness);
        CHECK_FALSE(m.witness->witness.is_null());
    }
}

TEST_CASE("mode override") {
    RunOptions o = quick();
    o.mode_override = Mode::Formal;
    CHECK(run_check(find_check("exgen"), o).status == Status::Skipped);
    o.mode_override = Mode::FormalSampled;
    const CheckReport r = run_check(find_check("gener"), o);
    CHECK(r.status == Status::Pass);
    CHECK(r.mode == Mode::FormalSampled);
    CHECK(r.points.size() == 1);
}

TEST_CASE("sampled points respect constraints and are reproducible") {
    for (const char* id : {"exgen", "gextend", "1sums", "2sums", "c1sums", "1sdss"}) {
        CAPTURE(id);
        const auto& c = find_check(id);
        const auto pts = sample_points(c, 7, 5);
        REQUIRE(pts.size() == 5);
        for (const auto& p : pts) {
            const BigRational qv = p.at(Sym::q);
            CHECK(qv > BigRational(0));
            CHECK(qv < BigRational(1));
            for (const auto& k : c.constraints) CHECK(k.expr(p).abs() < BigRational(1));
        }
        const auto again = sample_points(c, 7, 5);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (Sym s : c.params) CHECK(pts[i].at(s) == again[i].at(s));
    }
}

TEST_CASE("reports are deterministic") {
    RunOptions o = quick();
    o.seed = 5;
    const auto checks = select_checks("c1sums,gener,male");
    const auto a = reports_to_json(run_suite(checks, o), true).dump();
    o.jobs = 3;
    const auto b = reports_to_json(run_suite(checks, o), true).dump();
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("schema_version") == kReportSchemaVersion);
    CHECK(j.at("reports").size() == 3);
    CHECK_FALSE(j.at("reports")[0].contains("elapsed_ms"));
}

TEST_CASE("injected points are validated against constraints") {
    RunOptions o = quick();
    Assignment p = parse_bindings({"q=1/2,a=1/4,x=2,u=1/4,v=1/4,b=1/4,B=1/2,t=1/4"});
    o.injected_points["1sums"] = {p};
    CHECK_THROWS_AS(run_analytic(find_check("1sums"), o), DomainViolation);
    CHECK(run_check(find_check("1sums"), o).status == Status::Error);

    Assignment bad_q = p;
    bad_q.set(Sym::q, BigRational(2));
    bad_q.set(Sym::x, BigRational(1, 4));
    o.injected_points["1sums"] = {bad_q};
    CHECK_THROWS_AS(run_analytic(find_check("1sums"), o), DomainViolation);
}

TEST_CASE("reduction c and d hold at sampled points") {
    RunOptions o = quick();
    for (const char* id : {"reduction-c", "reduction-d"}) {
        CAPTURE(id);
        CHECK(run_check(find_check(id), o).status == Status::Pass);
    }
}

TEST_CASE("expression and series-string parsing") {
    const RatFunc q = RatFunc::var(Sym::q), a = RatFunc::var(Sym::a);
    CHECK(parse_expression("q^-2*a + 1/3") == q.pow(-2) * a + RatFunc(BigRational(1, 3)));
    CHECK(parse_expression("-(1 - q)^2 / 4") == -(RatFunc(1) - q).pow(2) / RatFunc(4));
    CHECK(parse_expression("lambda*0.5") == RatFunc::var(Sym::lam) * RatFunc(BigRational(1, 2)));
    CHECK_THROWS_AS(parse_expression("q +"), ParseError);
    CHECK_THROWS_AS(parse_expression("k"), SymbolError);

    const PhiText t = parse_phi("2phi1[q^-2, a; c; z]");
    CHECK(t.upper.size() == 2);
    CHECK(t.lower.size() == 1);
    CHECK_THROWS_AS(parse_phi("3phi1[a; c; z]"), ParseError);
    const PhiText e = parse_phi("[0; -; z]");
    CHECK(e.upper.size() == 1);
    CHECK(e.lower.empty());

    const Assignment at = parse_bindings({"q=1/2", "a=1/3,c=1/5", "z=1/4"});
    const PhiSpec<BigRational> spec = bind_phi(t, at);
    REQUIRE(spec.terminates_after);
    CHECK(*spec.terminates_after == 2);
    CHECK_FALSE(bind_phi(e, at).terminates_after);
    CHECK(bind_phi(e, at).upper[0].zero);
    CHECK_THROWS_AS(bind_phi(parse_phi("[b; ; z]"), at), ConfigError);
}
