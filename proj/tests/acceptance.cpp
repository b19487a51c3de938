// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "qident/families.hpp"
#include "qident/operators.hpp"
#include "qident/verify.hpp"

using namespace qident;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
    bool ok;
    std::string detail;
};

std::string failing(const std::vector<CheckReport>& rs) {
    std::string out;
    for (const auto& r : rs)
        if (r.status != Status::Pass) out += (out.empty() ? "" : ", ") + r.id + "=" + to_string(r.status);
    return out;
}

std::vector<const IdentityCheck*> formal_suite() { return select_checks("formal"); }

Line criterion1() {
    RunOptions o;
    o.order = 8;
    const auto t0 = Clock::now();
    const auto rs = run_suite(formal_suite(), o);
    const double secs = seconds_since(t0);
    const std::string bad = failing(rs);
    std::ostringstream os;
    os << rs.size() << " formal checks, symbolic, N=8, " << std::fixed << std::setprecision(1) << secs << " s";
    if (!bad.empty()) os << "; not passing: " << bad;
    return {bad.empty() && secs < 120, os.str()};
}

Line criterion2() {
    RunOptions o;
    o.order = 14;
    o.mode_override = Mode::FormalSampled;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string bad;
    std::size_t n = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
        o.seed = seed;
        const auto rs = run_suite(formal_suite(), o);
        n += rs.size();
        const std::string f = failing(rs);
        if (!f.empty()) bad += " seed " + std::to_string(seed) + ": " + f;
    }
    return {bad.empty(), std::to_string(n) + " sampled runs at N=14, seeds 1,2,3" + (bad.empty() ? "" : ";" + bad)};
}

Line criterion3() {
    RunOptions o;
    o.points = 5;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto t0 = Clock::now();
    const auto rs = run_suite(select_checks("analytic"), o);
    const double secs = seconds_since(t0);
    int pass = 0;
    for (const auto& r : rs) pass += r.status == Status::Pass && r.points.size() >= 5;
    std::ostringstream os;
    os << pass << "/" << rs.size() << " analytic checks pass at 5 points (eps 1e-25, tails 1e-30), " << std::fixed
       << std::setprecision(1) << secs << " s";
    const std::string bad = failing(rs);
    if (!bad.empty()) os << "; not passing: " << bad;
    return {pass == static_cast<int>(rs.size()) && secs < 120, os.str()};
}

Line criterion4() {
    const RatFunc A = RatFunc::var(Sym::A), b = RatFunc::var(Sym::b), q = RatFunc::var(Sym::q);
    int bad = 0;
    for (int n = 0; n <= 10; ++n) {
        const RatFunc c = apply_T(A.inverse(), b * A, RatFunc(cauchy_p(n)));
        const RatFunc pyx(cauchy_p(n, Sym::y, Sym::x));
        const RatFunc d = apply_E(A.inverse(), b * A, RatFunc(n % 2 ? -1 : 1) * q.pow(-static_cast<int>(binom2(n))) * pyx);
        bad += !(c == RatFunc(cigler_C3(n)));
        bad += !(d == RatFunc(cigler_D3(n)));
    }
    return {bad == 0, "C_n and D_n against their T/E representations for n <= 10, " + std::to_string(bad) +
                          " mismatches"};
}

Line criterion5() {
    const MultiPoly q = MultiPoly::var(Sym::q);
    int bad = 0;
    for (int n = 1; n <= 8; ++n) bad += !(apply_D(cauchy_p(n)) == (1 - q.pow(static_cast<unsigned>(n))) * cauchy_p(n - 1));
    return {bad == 0, "D p_n = (1 - q^n) p_(n-1) for 1 <= n <= 8, " + std::to_string(bad) + " mismatches"};
}

Line criterion6() {
    const CheckReport r = run_formal(find_check("male"), 12, false, 0);
    return {r.status == Status::Pass, "q-Chu-Vandermonde, coefficients t^0..t^12 with symbolic a, c: " +
                                          to_string(r.status)};
}

Line criterion7() {
    RunOptions o;
    o.order = 6;
    const auto rs = run_reductions(o);
    const std::string bad = failing(rs);
    return {bad.empty() && rs.size() == 4,
            std::to_string(rs.size()) + " reductions (s=0, lambda=0, v=0, extended s=0)" +
                (bad.empty() ? "" : "; not passing: " + bad)};
}

Line criterion8() {
    RunOptions o;
    o.order = 4;
    o.points = 2;
    int caught = 0, flips = 0, base_pass = 0;
    std::string missed;
    for (const auto& c : registry()) {
        const MutationResult m = mutation_witness(c, o);
        const bool witnessed = m.witness && !m.witness->witness.is_null();
        caught += witnessed;
        flips += m.flips();
        base_pass += m.base.status == Status::Pass;
        if (!witnessed) missed += " " + c.id;
    }
    const int total = static_cast<int>(registry().size());
    std::ostringstream os;
    os << caught << "/" << total << " identities: a catalogued mutation fails with a witness; " << flips << "/"
       << base_pass << " passing identities flip to fail";
    if (!missed.empty()) os << "; no witness:" << missed;
    return {caught == total && flips == base_pass, os.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Line (*)()>> criteria{
        {"formal suite at N=8", criterion1},          {"sampled re-run at N=14", criterion2},
        {"analytic suite", criterion3},               {"operator representations", criterion4},
        {"degree lowering", criterion5},              {"q-Chu-Vandermonde", criterion6},
        {"reductions", criterion7},                   {"mutation sensitivity", criterion8}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        try {
            l = criteria[i].second();
        } catch (const std::exception& e) {
            l = {false, std::string("exception: ") + e.what()};
        }
        failed += !l.ok;
        std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << l.detail << std::endl;
    }
    return failed ? 1 : 0;
}
