#include <algorithm>
#include <stdexcept>

#include "qident/families.hpp"
#include "qident/operators.hpp"
#include "qident/verify.hpp"

namespace qident {

namespace {

using enum Sym;

// ---------------------------------------------------------------------------
// Formal builders

template <class K>
class Ctx {
public:
    using TS = TruncSeries<K>;

    Ctx(const Scalars<K>& s, std::vector<Sym> vars, int order) : S(s), vars_(std::move(vars)), N(order) {
        std::sort(vars_.begin(), vars_.end());
    }

    const Scalars<K>& S;

    K operator()(Sym s) const { return S.sym(s); }
    K q() const { return S.sym(Sym::q); }
    K qp(long e) const { return ring_pow(q(), static_cast<int>(e)); }
    K inv_qfac(int n) const {
        K r(1), qj = q();
        for (int j = 1; j <= n; ++j) {
            r = r / (K(1) - qj);
            qj *= q();
        }
        return r;
    }
    static K sign(int n) { return K(n % 2 ? -1 : 1); }

    Deg d(Sym s, int k = 1) const {
        Deg out{0, 0, 0};
        const auto it = std::find(vars_.begin(), vars_.end(), s);
        if (it == vars_.end()) throw MissingExpansionVar(std::string(sym_name(s)) + " is not an expansion variable");
        out[static_cast<std::size_t>(it - vars_.begin())] = k;
        return out;
    }
    int order() const { return N; }
    const std::vector<Sym>& vars() const { return vars_; }

    TS one() const { return TS::constant(vars_, N, K(1)); }
    TS inf(const K& c, Sym v) const { return qpoch_infinite(c, d(v), q(), vars_, N); }
    TS inv(const K& c, Sym v) const { return qpoch_infinite_inverse(c, d(v), q(), vars_, N); }
    TS real(const K& c, Sym v, const K& P) const { return qpoch_real_exponent(c, d(v), P, q(), vars_, N); }

    /// sum_n f(n) v^n up to the order.
    template <class F>
    TS gen(Sym v, F f) const {
        TS s(vars_, N);
        for (int n = 0; n <= N; ++n) s.at(d(v, n)) = f(n);
        return s;
    }

    PhiParam<K> sc(K c) const { return PhiParam<K>::scalar(std::move(c)); }
    PhiParam<K> on(K c, Sym v, int k = 1) const { return PhiParam<K>::with(std::move(c), d(v, k)); }
    static PhiParam<K> zero() { return PhiParam<K>::null(); }
    TS phi(std::vector<PhiParam<K>> up, std::vector<PhiParam<K>> lo, PhiParam<K> arg,
           std::optional<int> term = std::nullopt) const {
        return phi_formal(PhiSpec<K>{std::move(up), std::move(lo), std::move(arg), term}, q(), vars_, N);
    }
    K phi_scalar(std::vector<PhiParam<K>> up, std::vector<PhiParam<K>> lo, PhiParam<K> arg, int term) const {
        return phi_formal(PhiSpec<K>{std::move(up), std::move(lo), std::move(arg), term}, q(), {}, 0)
            .coeff({0, 0, 0});
    }

    // Families at the current values; the symbolic cache is used when nothing is bound.
    K C3(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::cigler_C3, n));
        return cigler_C3<K>(n, (*this)(A), (*this)(x), (*this)(y), (*this)(b), q());
    }
    K D3(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::cigler_D3, n));
        return cigler_D3<K>(n, (*this)(A), (*this)(x), (*this)(y), (*this)(b), q());
    }
    K p(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::cauchy_p, n));
        return cauchy_p<K>(n, (*this)(x), (*this)(y), q());
    }
    K p_yx(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::cauchy_p_yx, n));
        return cauchy_p<K>(n, (*this)(y), (*this)(x), q());
    }
    K phi_hahn(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::hahn_phi, n));
        return hahn_phi<K>(n, (*this)(a), (*this)(x), q());
    }
    K psi_hahn(int n) const {
        if (S.pristine()) return S.lift(family_poly(Family::hahn_psi, n));
        return hahn_psi<K>(n, (*this)(a), (*this)(x), q());
    }

private:
    std::vector<Sym> vars_;
    int N;
};

template <class K>
Ctx(const Scalars<K>&, std::vector<Sym>, int) -> Ctx<K>;

OperatorVars op_vars(const Scalars<RatFunc>& S) {
    OperatorVars v;
    const RatFunc qv = S.sym(q);
    if (qv.is_constant()) v.q = qv.num().constant_value();
    return v;
}

/// Series restricted to the terms free of one variable (that variable set to 0).
template <class K>
TruncSeries<K> at_zero(const TruncSeries<K>& s, Sym v) {
    std::vector<Sym> rest;
    for (Sym w : s.vars())
        if (w != v) rest.push_back(w);
    TruncSeries<K> out(rest, s.order());
    for (const Deg& d : out.degrees()) {
        Deg e{0, 0, 0};
        for (std::size_t i = 0; i < rest.size(); ++i) e[static_cast<std::size_t>(s.slot(rest[i]))] = d[i];
        out.at(d) = s.coeff(e);
    }
    return out;
}

template <class L, class R>
void set_formal(IdentityCheck& c, L lhs, R rhs) {
    c.lhs_sym = [lhs](const Scalars<RatFunc>& S, int N, int i) { return lhs(S, N, i); };
    c.rhs_sym = [rhs](const Scalars<RatFunc>& S, int N, int i) { return rhs(S, N, i); };
    c.lhs_num = [lhs](const Scalars<BigRational>& S, int N, int i) { return lhs(S, N, i); };
    c.rhs_num = [rhs](const Scalars<BigRational>& S, int N, int i) { return rhs(S, N, i); };
}

template <class L, class R>
void set_formal_symbolic(IdentityCheck& c, L lhs, R rhs) {
    c.lhs_sym = lhs;
    c.rhs_sym = rhs;
}

std::vector<Mutation> catalog(const std::vector<Sym>& params) {
    auto has = [&](Sym s) { return std::find(params.begin(), params.end(), s) != params.end(); };
    std::vector<Mutation> out;
    if (has(A)) out.push_back({Mutation::Kind::TimesQ, A});
    if (has(x) && has(y)) out.push_back({Mutation::Kind::Swap, x, y});
    for (Sym s : params)
        if (s != q) out.push_back({Mutation::Kind::Scale, s});
    if (has(q)) out.push_back({Mutation::Kind::Scale, q});
    return out;
}

IdentityCheck formal(std::string id, std::string anchor, std::vector<Sym> vars, std::vector<Sym> params) {
    IdentityCheck c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.mode = Mode::Formal;
    c.expansion_vars = std::move(vars);
    c.params = std::move(params);
    c.mutations = catalog(c.params);
    return c;
}

// ---------------------------------------------------------------------------
// Numeric builders

class NCtx {
public:
    NCtx(const Scalars<BigRational>& s, const NumericConfig& cfg) : S(s), cfg_(cfg) {}

    BigRational operator()(Sym s) const { return S.sym(s); }
    BigRational q() const { return S.sym(Sym::q); }
    BigRational qp(long e) const { return q().pow(e); }
    Ball inf(const BigRational& v) const { return qpoch_inf_ball(v, q(), cfg_.tail_target, cfg_.kmax); }
    Ball inv(const BigRational& v) const { return qpoch_inf_inverse_ball(v, q(), cfg_.tail_target, cfg_.kmax); }
    static PhiParam<BigRational> sc(BigRational v) { return PhiParam<BigRational>::scalar(std::move(v)); }
    static PhiParam<BigRational> zero() { return PhiParam<BigRational>::null(); }
    Ball phi(std::vector<PhiParam<BigRational>> up, std::vector<PhiParam<BigRational>> lo, PhiParam<BigRational> arg,
             std::optional<int> term = std::nullopt) const {
        const NumericSum r = phi_numeric(PhiSpec<BigRational>{std::move(up), std::move(lo), std::move(arg), term}, q(), cfg_);
        return {r.value, r.tail};
    }
    const NumericConfig& cfg() const { return cfg_; }

    const Scalars<BigRational>& S;

private:
    NumericConfig cfg_;
};

/// Evaluates f with component accuracy tightened until the total radius meets the target.
template <class F>
Ball adaptive(const Scalars<BigRational>& S, const NumericConfig& cfg, F f) {
    BigRational tau = cfg.tail_target / 64;
    for (int attempt = 0; attempt < 6; ++attempt) {
        NumericConfig c = cfg;
        c.tail_target = tau;
        const Ball v = f(NCtx(S, c));
        if (v.rad <= cfg.tail_target) return v;
        tau = tau * cfg.tail_target / (v.rad * 16);
    }
    throw TailNotBounded("right-hand side radius stays above " + cfg.tail_target.to_sci());
}

Ball empirical(const NumericConfig& cfg, const std::function<BigRational(int)>& g) {
    const NumericSum r = sum_empirical(g, cfg);
    return {r.value, r.tail};
}

/// 1/(q;q)_n for n = 0, 1, ... computed incrementally.
class InvQfac {
public:
    explicit InvQfac(BigRational q) : q_(std::move(q)) { table_.push_back(BigRational(1)); }
    const BigRational& operator()(int n) {
        while (static_cast<int>(table_.size()) <= n) {
            const int j = static_cast<int>(table_.size());
            table_.push_back(table_.back() / (BigRational(1) - q_.pow(j)));
        }
        return table_[static_cast<std::size_t>(n)];
    }

private:
    BigRational q_;
    std::vector<BigRational> table_;
};

BigRational sgn(int n) { return BigRational(n % 2 ? -1 : 1); }

struct Range {
    Sym s;
    BigRational lo;
    BigRational hi;
    bool positive = false;
};

BigRational dyadic(Rng& rng, const BigRational& lo, const BigRational& hi, bool positive) {
    for (;;) {
        const long j = rng.uniform(2, 5);
        const long den = 1L << j;
        const BigRational v(rng.uniform(1, den - 1), den);
        if (v < lo || v > hi) continue;
        if (!positive && rng.uniform(0, 1) == 1) return -v;
        return v;
    }
}

std::function<Assignment(Rng&)> sampler(std::vector<Range> ranges,
                                        std::function<void(Assignment&, Rng&)> fix = nullptr) {
    return [ranges = std::move(ranges), fix = std::move(fix)](Rng& rng) {
        Assignment p;
        for (const auto& r : ranges) p.set(r.s, dyadic(rng, r.lo, r.hi, r.positive));
        if (fix) fix(p, rng);
        return p;
    };
}

Range q_range() { return {q, BigRational(1, 8), BigRational(5, 8), true}; }
Range var_range(Sym s, BigRational hi = BigRational(1, 2)) { return {s, BigRational(1, 32), std::move(hi), false}; }

Constraint bound(std::string text, std::function<BigRational(const Assignment&)> e) {
    return Constraint{std::move(text), std::move(e)};
}

/// a = q^m with m in {1,2,3}: the psi-side left-hand sums converge only there.
void a_on_q_powers(Assignment& p, Rng& rng) { p.set(a, p.at(q).pow(rng.uniform(1, 3))); }

IdentityCheck analytic(std::string id, std::string anchor, std::vector<Sym> params) {
    IdentityCheck c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.mode = Mode::Analytic;
    c.params = std::move(params);
    c.mutations = catalog(c.params);
    return c;
}

using RS = Scalars<RatFunc>;
using TSR = TruncSeries<RatFunc>;

// ---------------------------------------------------------------------------
// Shared right-hand sides (also used by the reduction checks)

template <class K>
TruncSeries<K> ler_rhs(const Scalars<K>& S, int N) {
    Ctx c(S, {t}, N);
    return c.inf(c(y), t) * c.inf(c(b), t) * c.inv(c(x), t) * c.inv(c(A) * c(b), t);
}
template <class K>
TruncSeries<K> lerr_rhs(const Scalars<K>& S, int N) {
    Ctx c(S, {t}, N);
    return c.inf(c(x), t) * c.inf(c(b), t) * c.inv(c(y), t) * c.inv(c(A) * c(b), t);
}
template <class K>
TruncSeries<K> exd_rhs(const Scalars<K>& S, int N, int s, bool swapped) {
    Ctx c(S, {t}, N);
    const K X = swapped ? c(y) : c(x), Y = swapped ? c(x) : c(y);
    return c.real(c(b), t, c(A)) * c.inf(Y, t) * c.inv(X, t) *
           c.phi({c.sc(c.qp(-s)), c.on(X, t), c.on(c(A) * c(b), t)}, {c.on(Y, t), c.on(c(b), t)}, c.sc(c.q()), s);
}
template <class K>
TruncSeries<K> gs_rhs(const Scalars<K>& S, int N, bool swapped) {
    Ctx c(S, {t, lam}, N);
    const K X = swapped ? c(y) : c(x), Y = swapped ? c(x) : c(y);
    return c.inf(K(1), lam) * c.inf(Y, t) * c.inf(c(b), t) * c.inv(X, t) * c.inv(c(A) * c(b), t) *
           c.phi({c.on(X, t), c.on(c(A) * c(b), t), c.zero()}, {c.on(Y, t), c.on(c(b), t)}, c.on(K(1), lam));
}

// Analytic right-hand sides.
Ball exgen_rhs(const NCtx& c, bool swapped) {
    const BigRational X = swapped ? c(y) : c(x), Y = swapped ? c(x) : c(y);
    const BigRational s_ = c(s), t_ = c(t);
    return c.inf(Y * s_) * c.inf(c(b) * s_) * c.inv(t_ / s_) * c.inv(X * s_) * c.inv(c(A) * c(b) * s_) *
           c.phi({c.sc(X * s_), c.sc(c(A) * c(b) * s_), c.zero(), c.zero()},
                 {c.sc(c.q() * s_ / t_), c.sc(Y * s_), c.sc(c(b) * s_)}, c.sc(c.q()));
}
Ball gextend_rhs(const NCtx& c, bool swapped) {
    const BigRational X = swapped ? c(y) : c(x), Y = swapped ? c(x) : c(y);
    const BigRational w_ = c(w), t_ = c(t), s_ = c(s);
    return c.inf(Y * w_) * c.inf(c(b) * w_) * c.inv(s_ / t_) * c.inv(t_ / w_) * c.inv(X * w_) *
           c.inv(c(A) * c(b) * w_) *
           c.phi({c.sc(X * w_), c.sc(c(A) * c(b) * w_), c.zero(), c.zero()},
                 {c.sc(Y * w_), c.sc(c(b) * w_), c.sc(c.q() * w_ / t_)}, c.sc(c.q()));
}
Ball sums1_rhs(const NCtx& c) {
    const BigRational t_ = c(t);
    return c.inf(c(a) * c(x)) * c.inf(c(v) * t_) * c.inf(c(b) * t_) * c.inv(c(x)) * c.inv(c(u) * t_) *
           c.inv(c(B) * c(b) * t_) *
           c.phi({c.sc(c(a)), c.sc(c(u) * t_), c.sc(c(B) * c(b) * t_), c.zero()},
                 {c.sc(c.q() / c(x)), c.sc(c(v) * t_), c.sc(c(b) * t_)}, c.sc(c.q()));
}
Ball s1_rhs(const NCtx& c) {
    const BigRational t_ = c(t);
    return c.inf(c(a) * c(x)) * c.inf(c(b) * t_) * c.inv(c(x)) * c.inv(c(u) * t_) * c.inv(c(B) * c(b) * t_) *
           c.phi({c.sc(c(a)), c.sc(c(u) * t_), c.sc(c(B) * c(b) * t_)}, {c.sc(c.q() / c(x)), c.sc(c(b) * t_)},
                 c.sc(c.q()));
}
/// 3phi3 of the bilinear psi-side formula with lower parameter 1/(v x t) and
/// argument a u q/(B v) merged into the factor x t/(v x t - q^n), regular at v = 0.
Ball sums2_rhs(const NCtx& c) {
    const BigRational Q = c.q(), X = c(x), T = c(t), V = c(v);
    const BigRational xt = X * T, vxt = V * xt;
    const std::vector<BigRational> up{(c(a) * X).inverse(), (c(u) * xt).inverse(), (c(b) * xt).inverse()};
    const std::vector<BigRational> lo{Q / X, (c(B) * c(b) * xt).inverse()};
    const BigRational pre = c(a) * c(u) * Q / c(B) * xt;
    auto ratio = [&](int n) {
        const BigRational qn = Q.pow(n);
        BigRational r = pre * (-qn) / ((vxt - qn) * (BigRational(1) - qn * Q));
        for (const auto& p : up) r *= BigRational(1) - p * qn;
        for (const auto& p : lo) {
            const BigRational d = BigRational(1) - p * qn;
            if (d.is_zero()) throw DivisionByZero("lower parameter hits q^-n");
            r /= d;
        }
        return r;
    };
    const BigRational aq = Q.abs();
    auto bnd = [&](int K) -> std::optional<BigRational> {
        const BigRational qK = aq.pow(K);
        BigRational f;
        if (vxt.is_zero()) f = BigRational(1);
        else if (qK * 2 <= vxt.abs()) f = qK * 2 / vxt.abs();
        else return std::nullopt;
        BigRational r = pre.abs() * f / (BigRational(1) - qK * aq);
        for (const auto& p : up) r *= BigRational(1) + p.abs() * qK;
        for (const auto& p : lo) {
            const BigRational d = BigRational(1) - p.abs() * qK;
            if (d.sign() <= 0) return std::nullopt;
            r /= d;
        }
        return r;
    };
    const NumericSum sum = sum_by_ratio(BigRational(1), ratio, bnd, c.cfg());
    const BigRational xtq = xt * Q;
    return c.inf(Q / X) * c.inf(c(u) * xtq) * c.inf(c(b) * xtq) * c.inv(c(a) * Q) * c.inv(V * xtq) *
           c.inv(c(b) * xtq * c(B)) * Ball(sum.value, sum.tail);
}
Ball s2_rhs(const NCtx& c) {
    const BigRational Q = c.q(), X = c(x), T = c(t);
    const BigRational xt = X * T, xtq = xt * Q;
    return c.inf(Q / X) * c.inf(c(u) * xtq) * c.inf(c(b) * xtq) * c.inv(c(a) * Q) * c.inv(c(b) * xtq * c(B)) *
           c.phi({c.sc((c(a) * X).inverse()), c.sc((c(u) * xt).inverse()), c.sc((c(b) * xt).inverse())},
                 {c.sc(Q / X), c.sc((c(B) * c(b) * xt).inverse())}, c.sc(c(a) * c(u) * xtq / c(B)));
}

// Analytic left-hand sums.
Ball exgen_lhs(const NCtx& c, const NumericConfig& cfg, bool dual) {
    const BigRational Q = c.q(), T = c(t), Sv = c(s);
    InvQfac iq(Q);
    return empirical(cfg, [&, Q, T, Sv](int N) {
        BigRational h(0);
        for (int n = 0; n <= N; ++n) h += T.pow(n) * Sv.pow(N - n) * iq(n) * iq(N - n);
        if (h.is_zero()) return h;
        if (dual)
            return sgn(N) * Q.pow(binom2(N)) * cigler_D3<BigRational>(N, c(A), c(x), c(y), c(b), Q) * h;
        return cigler_C3<BigRational>(N, c(A), c(x), c(y), c(b), Q) * h;
    });
}
Ball gextend_lhs(const NCtx& c, const NumericConfig& cfg, bool dual) {
    const BigRational Q = c.q(), T = c(t), Sv = c(s), W = c(w);
    InvQfac iq(Q);
    return empirical(cfg, [&, Q, T, Sv, W](int N) {
        BigRational h(0);
        for (int n = 0; n <= N; ++n)
            for (int m = 0; n + m <= N; ++m) {
                const int k = N - n - m;
                h += T.pow(n) * Sv.pow(m) * W.pow(k) * iq(n + m) * iq(m) * iq(k);
            }
        if (h.is_zero()) return h;
        if (dual)
            return sgn(N) * Q.pow(binom2(N)) * cigler_D3<BigRational>(N, c(A), c(x), c(y), c(b), Q) * h;
        return cigler_C3<BigRational>(N, c(A), c(x), c(y), c(b), Q) * h;
    });
}
BigRational sums1_term(const NCtx& c, InvQfac& iq, int n) {
    const BigRational Q = c.q();
    return hahn_phi<BigRational>(n, c(a), c(x), Q) * cigler_C3<BigRational>(n, c(B), c(u), c(v), c(b), Q) *
           c(t).pow(n) * iq(n);
}
BigRational s1_term(const NCtx& c, InvQfac& iq, int n) {
    const BigRational Q = c.q();
    return hahn_phi<BigRational>(n, c(a), c(x), Q) * caoniu_C<BigRational>(n, c(B) * Q.pow(-n), c(u), c(b), Q) *
           c(t).pow(n) * iq(n);
}
BigRational sums2_term(const NCtx& c, InvQfac& iq, int n) {
    const BigRational Q = c.q();
    return sgn(n) * Q.pow(binom2(n + 1)) * hahn_psi<BigRational>(n, c(a), c(x), Q) *
           cigler_D3<BigRational>(n, c(B), c(u), c(v), c(b), Q) * c(t).pow(n) * iq(n);
}
BigRational s2_term(const NCtx& c, InvQfac& iq, int n) {
    const BigRational Q = c.q();
    return sgn(n) * Q.pow(binom2(n + 1)) * hahn_psi<BigRational>(n, c(a), c(x), Q) *
           caoniu_D<BigRational>(n, c(B) * Q.pow(-n), c(u), c(b), Q) * c(t).pow(n) * iq(n);
}
template <class Term>
Ball single_sum(const NCtx& c, const NumericConfig& cfg, Term term) {
    InvQfac iq(c.q());
    return empirical(cfg, [&](int n) { return term(c, iq, n); });
}
/// First `count` terms summed exactly.
template <class Term>
Ball partial_sum(const NCtx& c, Term term, int count) {
    InvQfac iq(c.q());
    BigRational s(0);
    for (int n = 0; n < count; ++n) s += term(c, iq, n);
    return Ball(s);
}

Scalars<BigRational> with_v0(const Scalars<BigRational>& S) { return S.with_override(v, BigRational(0)); }
Scalars<BigRational> with_s0(const Scalars<BigRational>& S) { return S.with_override(s, BigRational(0)); }

// ---------------------------------------------------------------------------

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> reg;

    {
        auto c = formal("usu", "relation (aq^-n;q)_n = (q/a;q)_n (-a)^n q^(-n-binom(n,2))", {t}, {q, a});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return qpoch(c(a) * c.qp(-n), c.q(), n); });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) {
                    return qpoch(c.q() / c(a), c.q(), n) * ring_pow(-c(a), n) * c.qp(-n - binom2(n));
                });
            });
        c.notes.push_back("coefficient of t^n is the relation at length n");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("qbinom-spec", "generalized q-binomial specialized at q^alpha = q^n", {t, s}, {q});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t, s}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n <= N; ++n)
                    for (int k = 0; k <= n; ++k) {
                        const K P = c.qp(n);
                        K g(1);
                        for (int j = 0; j < k; ++j) g *= c.qp(j) - P;
                        out.at(c.d(t, k) + c.d(s, n - k)) = g * c.qp(-binom2(k)) * c.inv_qfac(k);
                    }
                return out;
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t, s}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n <= N; ++n) {
                    const auto row = qbinom_row(n, c.q());
                    for (int k = 0; k <= n; ++k) out.at(c.d(t, k) + c.d(s, n - k)) = row[static_cast<std::size_t>(k)];
                }
                return out;
            });
        c.notes.push_back("coefficient of t^k s^(n-k) compares [alpha,k] at q^alpha = q^n with [n,k]");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("gener", "generating function of the Cauchy polynomials", {t}, {q, x, y});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.p(n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.inf(c(y), t) * c.inv(c(x), t);
            });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("putt", "Cauchy identity or the q-binomial theorem", {t}, {q, a, z});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.phi({c.sc(c(a))}, {}, c.on(c(z), t));
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.inf(c(a) * c(z), t) * c.inv(c(z), t);
            });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("euler", "Euler's identity: sum z^n t^n/(q;q)_n = 1/(zt;q)_inf", {t}, {q, z});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return ring_pow(c(z), n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return qpoch_infinite_by_recursion(c(z), c.d(t), c.q(), c.vars(), N).reciprocal();
            });
        c.notes.push_back("right-hand product built from its functional equation, independent of the closed-form sum");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("euler-inv", "Euler's identity: sum (-1)^n q^binom(n,2) z^n t^n/(q;q)_n = (zt;q)_inf", {t},
                        {q, z});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.sign(n) * c.qp(binom2(n)) * ring_pow(c(z), n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return qpoch_infinite_by_recursion(c(z), c.d(t), c.q(), c.vars(), N);
            });
        c.notes.push_back("right-hand product built from its functional equation, independent of the closed-form sum");
        reg.push_back(std::move(c));
    }
    {
        auto e = formal("male", "q-Chu-Vandermonde", {t}, {q, a, Sym::c});
        set_formal(
            e,
            [](const auto& S, int N, int) {
                Ctx k(S, {t}, N);
                return k.gen(t, [&](int n) {
                    return k.phi_scalar({k.sc(k.qp(-n)), k.sc(k(a))}, {k.sc(k(c))}, k.sc(k(c) * k.qp(n) / k(a)), n);
                });
            },
            [](const auto& S, int N, int) {
                Ctx k(S, {t}, N);
                return k.gen(t, [&](int n) { return qpoch(k(c) / k(a), k.q(), n) / qpoch(k(c), k.q(), n); });
            });
        e.notes.push_back("coefficient of t^n is the summation at length n");
        reg.push_back(std::move(e));
    }
    {
        auto c = formal("tO1", "T(q^-alpha, zD) on (yt;q)_inf/(xt;q)_inf", {t}, {q, A, z});
        c.keep_symbolic = {x, y};
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return apply_T(c(A).inverse(), c(z), c.inf(c(y), t) * c.inv(c(x), t),
                               op_vars(S));
            },
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.inf(c(y), t) * c.inf(c(z) / c(A), t) * c.inv(c(x), t) * c.inv(c(z), t);
            });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("tO2", "E(q^-alpha, z theta) on (xt;q)_inf/(yt;q)_inf", {t}, {q, A, z});
        c.keep_symbolic = {x, y};
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return apply_E(c(A).inverse(), c(z), c.inf(c(x), t) * c.inv(c(y), t),
                               op_vars(S));
            },
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.inf(c(x), t) * c.inf(c(z) / c(A), t) * c.inv(c(y), t) * c.inv(c(z), t);
            });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("bella", "T(q^-alpha, bD) on p_n(x,y)(ys;q)_inf/((ys;q)_n(xs;q)_inf)", {s}, {q, A, b});
        c.keep_symbolic = {x, y};
        c.instances = 6;
        c.instance_name = "n";
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int n) {
                Ctx c(S, {s}, N);
                const RatFunc X = RatFunc::var(x), Y = RatFunc::var(y);
                const RatFunc pn = cauchy_p<RatFunc>(n, X, Y, c.q());
                return apply_T(c(A).inverse(), c(b), c.inf(Y * c.qp(n), s) * c.inv(X, s) * pn, op_vars(S))
                    .shifted(c.d(s, n));
            },
            [](const RS& S, int N, int n) {
                Ctx c(S, {s}, N);
                const RatFunc bA = c(b) / c(A);
                return c.inf(c(y), s) * c.inf(bA, s) * c.inv(c(x), s) * c.inv(c(b), s) *
                       c.phi({c.sc(c.qp(-n)), c.on(c(x), s), c.on(c(b), s)}, {c.on(c(y), s), c.on(bA, s)},
                             c.sc(c.q()), n);
            });
        c.notes.push_back("both sides multiplied by s^n; n = 0..5");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("tbella", "E(q^-alpha, b theta) on p_n(y,x)(xs;q)_inf/((xs;q)_n(ys;q)_inf)", {s}, {q, A, b});
        c.keep_symbolic = {x, y};
        c.instances = 6;
        c.instance_name = "n";
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int n) {
                Ctx c(S, {s}, N);
                const RatFunc X = RatFunc::var(x), Y = RatFunc::var(y);
                const RatFunc pn = cauchy_p<RatFunc>(n, Y, X, c.q());
                return apply_E(c(A).inverse(), c(b), c.inf(X * c.qp(n), s) * c.inv(Y, s) * pn, op_vars(S))
                    .shifted(c.d(s, n));
            },
            [](const RS& S, int N, int n) {
                Ctx c(S, {s}, N);
                const RatFunc bA = c(b) / c(A);
                return c.inf(c(x), s) * c.inf(bA, s) * c.inv(c(y), s) * c.inv(c(b), s) *
                       c.phi({c.sc(c.qp(-n)), c.on(c(y), s), c.on(c(b), s)}, {c.on(c(x), s), c.on(bA, s)},
                             c.sc(c.q()), n);
            });
        c.notes.push_back("both sides multiplied by s^n; n = 0..5");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("check1-rep", "C_n = T(q^-alpha, bq^alpha D){p_n(x,y)}", {t}, {q, A, b});
        c.keep_symbolic = {x, y};
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.C3(n); });
            },
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                const OperatorVars ov = op_vars(S);
                return c.gen(t, [&](int n) {
                    return apply_T(c(A).inverse(), c(b) * c(A), cauchy_p<RatFunc>(n, c(x), c(y), c.q()), -1, ov);
                });
            });
        c.notes.push_back("coefficient of t^n compares the representation at degree n");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("check2-rep", "D_n = E(q^-alpha, bq^alpha theta){(-1)^n q^-binom(n,2) p_n(y,x)}", {t},
                        {q, A, b});
        c.keep_symbolic = {x, y};
        set_formal_symbolic(
            c,
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.D3(n); });
            },
            [](const RS& S, int N, int) {
                Ctx c(S, {t}, N);
                const OperatorVars ov = op_vars(S);
                return c.gen(t, [&](int n) {
                    const RatFunc f = c.sign(n) * c.qp(-binom2(n)) * cauchy_p<RatFunc>(n, c(y), c(x), c.q());
                    return apply_E(c(A).inverse(), c(b) * c(A), f, -1, ov);
                });
            });
        c.notes.push_back("coefficient of t^n compares the representation at degree n");
        reg.push_back(std::move(c));
    }
    for (int shift = 0; shift <= 3; ++shift) {
        auto c = formal("exdddgen-s" + std::to_string(shift), "shifted generating function of C_n, s = " + std::to_string(shift),
                        {t}, {q, A, x, y, b});
        set_formal(
            c,
            [shift](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n + shift <= N; ++n) out.at(c.d(t, n + shift)) = c.C3(n + shift) * c.inv_qfac(n);
                return out;
            },
            [shift](const auto& S, int N, int) { return exd_rhs(S, N, shift, false); });
        c.notes.push_back("(bt;q)_alpha := (bt;q)_inf/(q^alpha bt;q)_inf");
        reg.push_back(std::move(c));
    }
    for (int shift = 0; shift <= 3; ++shift) {
        auto c = formal("sexdddgen-s" + std::to_string(shift), "shifted generating function of D_n, s = " + std::to_string(shift),
                        {t}, {q, A, x, y, b});
        set_formal(
            c,
            [shift](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n + shift <= N; ++n) {
                    const int m = n + shift;
                    out.at(c.d(t, m)) = c.D3(m) * c.sign(m) * c.qp(binom2(m)) * c.inv_qfac(n);
                }
                return out;
            },
            [shift](const auto& S, int N, int) { return exd_rhs(S, N, shift, true); });
        c.notes.push_back("(bt;q)_alpha := (bt;q)_inf/(q^alpha bt;q)_inf");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("ler", "generating function (yt, bt;q)_inf/(xt, q^alpha bt;q)_inf", {t}, {q, A, x, y, b});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.C3(n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) { return ler_rhs(S, N); });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("lerr", "generating function (xt, bt;q)_inf/(yt, q^alpha bt;q)_inf", {t}, {q, A, x, y, b});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.sign(n) * c.qp(binom2(n)) * c.D3(n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) { return lerr_rhs(S, N); });
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("gs", "generating function with (lambda;q)_n, C_n side", {t, lam}, {q, A, x, y, b});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t, lam}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n <= N; ++n)
                    out += qpoch_series(K(1), c.d(lam), c.q(), n, c.vars(), N - n).embedded(c.vars(), N).shifted(c.d(t, n)) *
                           (c.C3(n) * c.inv_qfac(n));
                return out;
            },
            [](const auto& S, int N, int) { return gs_rhs(S, N, false); });
        c.notes.push_back("lambda is an expansion variable");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("cc1sums", "generating function with (lambda;q)_n, D_n side", {t, lam}, {q, A, x, y, b});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t, lam}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                TruncSeries<K> out(c.vars(), N);
                for (int n = 0; n <= N; ++n)
                    out += qpoch_series(K(1), c.d(lam), c.q(), n, c.vars(), N - n).embedded(c.vars(), N).shifted(c.d(t, n)) *
                           (c.sign(n) * c.qp(binom2(n)) * c.D3(n) * c.inv_qfac(n));
                return out;
            },
            [](const auto& S, int N, int) { return gs_rhs(S, N, true); });
        c.notes.push_back("lambda is an expansion variable");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("21sums", "generating function of phi_n with (lambda;q)_n", {t}, {q, a, x, lam});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                return c.gen(t, [&](int n) { return c.phi_hahn(n) * qpoch(c(lam), c.q(), n) * c.inv_qfac(n); });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                return c.inf(c(lam), t) * c.inv(K(1), t) *
                       c.phi({c.sc(c(lam)), c.sc(c(a))}, {c.on(c(lam), t)}, c.on(c(x), t));
            });
        reg.push_back(std::move(c));
    }
    {
        auto e = formal("2sdss", "transformation of 2phi1 into 2phi2", {t}, {q, a, b, Sym::c});
        set_formal(
            e,
            [](const auto& S, int N, int) {
                Ctx k(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                return k.phi({k.sc(k(a)), k.sc(k(b))}, {k.sc(k(c))}, k.on(K(1), t));
            },
            [](const auto& S, int N, int) {
                Ctx k(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                return k.inf(k(b), t) * k.inv(K(1), t) *
                       k.phi({k.sc(k(b)), k.sc(k(c) / k(a))}, {k.on(k(b), t), k.sc(k(c))}, k.on(k(a), t));
            });
        e.notes.push_back("z is the expansion variable t");
        reg.push_back(std::move(e));
    }
    {
        auto c = formal("c1sums-formal", "generating function of psi_n with (1/lambda;q)_n, as a power series in t", {t},
                        {q, a, x, lam});
        set_formal(
            c,
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                const K il = K(1) / c(lam);
                return c.gen(t, [&](int n) {
                    return c.psi_hahn(n) * qpoch(il, c.q(), n) * ring_pow(c(lam) * c.q(), n) * c.inv_qfac(n);
                });
            },
            [](const auto& S, int N, int) {
                Ctx c(S, {t}, N);
                using K = typename std::decay_t<decltype(S)>::value_type;
                const K one(1);
                return c.inf(c(x) * c.q(), t) * c.inv(c(lam) * c(x) * c.q(), t) *
                       c.phi({c.sc(one / c(lam)), c.sc(one / (c(a) * c(x)))}, {c.on(one / (c(lam) * c(x)), t, -1)},
                             c.sc(c(a) * c.q()));
            });
        c.notes.push_back("supplementary: the analytic entry c1sums diverges at generic points");
        reg.push_back(std::move(c));
    }

    // ---------------------------------------------------------------- analytic
    auto add_exgen = [&](bool dual) {
        auto c = analytic(dual ? "2exgen" : "exgen",
                          dual ? "Rogers type formula for D_n" : "Rogers type formula for C_n", {q, A, x, y, b, t, s});
        c.constraints = {bound("|t/s| < 1", [](const Assignment& p) { return p.at(t) / p.at(s); }),
                         bound(dual ? "|ys| < 1" : "|xs| < 1",
                               [dual](const Assignment& p) { return p.at(dual ? y : x) * p.at(s); }),
                         bound("|q^alpha bs| < 1", [](const Assignment& p) { return p.at(A) * p.at(b) * p.at(s); })};
        c.sampler = sampler({q_range(), var_range(A, BigRational(3, 4)), var_range(x), var_range(y), var_range(b),
                             var_range(t), var_range(s, BigRational(3, 4))});
        c.lhs_value = [dual](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return exgen_lhs(NCtx(S, cfg), cfg, dual);
        };
        c.rhs_value = [dual](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [dual](const NCtx& k) { return exgen_rhs(k, dual); });
        };
        reg.push_back(std::move(c));
    };
    add_exgen(false);
    add_exgen(true);

    auto add_gextend = [&](bool dual) {
        auto c = analytic(dual ? "2gextend" : "gextend",
                          dual ? "extended Rogers type formula for D_n" : "extended Rogers type formula for C_n",
                          {q, A, x, y, b, t, s, w});
        c.constraints = {bound("|s/t| < 1", [](const Assignment& p) { return p.at(s) / p.at(t); }),
                         bound("|t/omega| < 1", [](const Assignment& p) { return p.at(t) / p.at(w); }),
                         bound(dual ? "|y omega| < 1" : "|x omega| < 1",
                               [dual](const Assignment& p) { return p.at(dual ? y : x) * p.at(w); }),
                         bound("|q^alpha b omega| < 1", [](const Assignment& p) { return p.at(A) * p.at(b) * p.at(w); })};
        c.sampler = sampler({q_range(), var_range(A, BigRational(3, 4)), var_range(x), var_range(y), var_range(b),
                             var_range(t), var_range(s), var_range(w, BigRational(3, 4))});
        c.lhs_value = [dual](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return gextend_lhs(NCtx(S, cfg), cfg, dual);
        };
        c.rhs_value = [dual](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [dual](const NCtx& k) { return gextend_rhs(k, dual); });
        };
        reg.push_back(std::move(c));
    };
    add_gextend(false);
    add_gextend(true);

    {
        auto c = analytic("1sums", "Srivastava-Agarwal type bilinear generating function, phi_n and C_n",
                          {q, a, x, u, v, b, B, t});
        c.constraints = {bound("|x| < 1", [](const Assignment& p) { return p.at(x); }),
                         bound("|ut| < 1", [](const Assignment& p) { return p.at(u) * p.at(t); }),
                         bound("|q^beta bt| < 1", [](const Assignment& p) { return p.at(B) * p.at(b) * p.at(t); })};
        c.sampler = sampler({q_range(), var_range(a), var_range(x), var_range(u), var_range(v), var_range(b),
                             var_range(B, BigRational(3, 4)), var_range(t)});
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return single_sum(NCtx(S, cfg), cfg, sums1_term);
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& k) { return sums1_rhs(k); });
        };
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("2sums", "Srivastava-Agarwal type bilinear generating function, psi_n and D_n",
                          {q, a, x, u, v, b, B, t});
        c.constraints = {bound("|alpha q| < 1", [](const Assignment& p) { return p.at(a) * p.at(q); }),
                         bound("|v xt| < 1", [](const Assignment& p) { return p.at(v) * p.at(x) * p.at(t); }),
                         bound("|bxtq^(beta+1)| < 1",
                               [](const Assignment& p) { return p.at(b) * p.at(x) * p.at(t) * p.at(q) * p.at(B); })};
        c.sampling_constraints = {
            bound("left-hand convergence |4 t u/a| < 1",
                  [](const Assignment& p) { return p.at(t) * p.at(u) * 4 / p.at(a); }),
            bound("left-hand convergence |4 t v/a| < 1",
                  [](const Assignment& p) { return p.at(t) * p.at(v) * 4 / p.at(a); }),
            bound("left-hand convergence |4 t b/a| < 1",
                  [](const Assignment& p) { return p.at(t) * p.at(b) * 4 / p.at(a); })};
        c.sampler = sampler({q_range(), var_range(x), var_range(u), var_range(v), var_range(b),
                             var_range(B, BigRational(3, 4)), var_range(t)},
                            a_on_q_powers);
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return single_sum(NCtx(S, cfg), cfg, sums2_term);
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& k) { return sums2_rhs(k); });
        };
        c.notes.push_back("alpha sampled on q^m, m = 1..3, where the left-hand sum converges");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("1s", "bilinear generating function with Cao-Niu C_n^(beta-n)(u,b)", {q, a, x, u, b, B, t});
        c.constraints = {bound("|x| < 1", [](const Assignment& p) { return p.at(x); }),
                         bound("|ut| < 1", [](const Assignment& p) { return p.at(u) * p.at(t); }),
                         bound("|q^beta bt| < 1", [](const Assignment& p) { return p.at(B) * p.at(b) * p.at(t); })};
        c.sampler = sampler({q_range(), var_range(a), var_range(x), var_range(u), var_range(b),
                             var_range(B, BigRational(3, 4)), var_range(t)});
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return single_sum(NCtx(S, cfg), cfg, s1_term);
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& k) { return s1_rhs(k); });
        };
        c.notes.push_back("C_n^(beta-n)(u,b) taken as the Cao-Niu family with q^alpha = q^beta q^-n");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("2s", "bilinear generating function with Cao-Niu D_n^(beta-n)(u,b)", {q, a, x, u, b, B, t});
        c.constraints = {bound("|alpha q| < 1", [](const Assignment& p) { return p.at(a) * p.at(q); }),
                         bound("|bxtq^(beta+1)| < 1",
                               [](const Assignment& p) { return p.at(b) * p.at(x) * p.at(t) * p.at(q) * p.at(B); })};
        c.sampling_constraints = {
            bound("left-hand convergence |4 t u/a| < 1",
                  [](const Assignment& p) { return p.at(t) * p.at(u) * 4 / p.at(a); }),
            bound("left-hand convergence |4 t b/a| < 1",
                  [](const Assignment& p) { return p.at(t) * p.at(b) * 4 / p.at(a); })};
        c.sampler = sampler({q_range(), var_range(x), var_range(u), var_range(b), var_range(B, BigRational(3, 4)),
                             var_range(t)},
                            a_on_q_powers);
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return single_sum(NCtx(S, cfg), cfg, s2_term);
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& k) { return s2_rhs(k); });
        };
        c.notes.push_back("D_n^(beta-n)(u,b) taken as the Cao-Niu family with q^alpha = q^beta q^-n");
        c.notes.push_back("alpha sampled on q^m, m = 1..3, where the left-hand sum converges");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("c1sums", "generating function of psi_n with (1/lambda;q)_n", {q, a, x, lam, t});
        c.constraints = {bound("|lambda xtq| < 1", [](const Assignment& p) { return p.at(lam) * p.at(x) * p.at(t) * p.at(q); }),
                         bound("|alpha q| < 1", [](const Assignment& p) { return p.at(a) * p.at(q); })};
        c.sampling_constraints = {bound("left-hand convergence |2 lambda t q/alpha| < 1", [](const Assignment& p) {
            return p.at(lam) * p.at(t) * p.at(q) * 2 / p.at(a);
        })};
        c.sampler = sampler({q_range(), var_range(x), var_range(lam), var_range(t)}, a_on_q_powers);
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            const NCtx k(S, cfg);
            return single_sum(k, cfg, [](const NCtx& c, InvQfac& iq, int n) {
                const BigRational Q = c.q();
                return hahn_psi<BigRational>(n, c(a), c(x), Q) * qpoch(c(lam).inverse(), Q, n) *
                       (c(lam) * c(t) * Q).pow(n) * iq(n);
            });
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& c) {
                const BigRational xtq = c(x) * c(t) * c.q();
                return c.inf(xtq) * c.inv(c(lam) * xtq) *
                       c.phi({c.sc(c(lam).inverse()), c.sc((c(a) * c(x)).inverse())},
                             {c.sc((c(lam) * c(x) * c(t)).inverse())}, c.sc(c(a) * c.q()));
            });
        };
        c.notes.push_back("alpha sampled on q^m, m = 1..3, where the left-hand sum converges");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("1ss", "generating function of phi_n with (lambda;q)_n into 3phi2", {q, a, x, lam, t});
        c.constraints = {bound("|t| < 1", [](const Assignment& p) { return p.at(t); }),
                         bound("|x| < 1", [](const Assignment& p) { return p.at(x); })};
        c.sampler = sampler({q_range(), var_range(a), var_range(x), var_range(lam), var_range(t)});
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            const NCtx k(S, cfg);
            return single_sum(k, cfg, [](const NCtx& c, InvQfac& iq, int n) {
                const BigRational Q = c.q();
                return hahn_phi<BigRational>(n, c(a), c(x), Q) * qpoch(c(lam), Q, n) * c(t).pow(n) * iq(n);
            });
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& c) {
                return c.inf(c(a) * c(x)) * c.inf(c(lam) * c(t)) * c.inv(c(x)) * c.inv(c(t)) *
                       c.phi({c.sc(c(a)), c.sc(c(t)), c.zero()}, {c.sc(c.q() / c(x)), c.sc(c(lam) * c(t))},
                             c.sc(c.q()));
            });
        };
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("2ss", "generating function of psi_n with (1/lambda;q)_n into 2phi2", {q, a, x, lam, t});
        c.constraints = {bound("|alpha q| < 1", [](const Assignment& p) { return p.at(a) * p.at(q); }),
                         bound("|xt| < 1", [](const Assignment& p) { return p.at(x) * p.at(t); })};
        c.sampling_constraints = {bound("left-hand convergence |2 lambda t q/alpha| < 1", [](const Assignment& p) {
            return p.at(lam) * p.at(t) * p.at(q) * 2 / p.at(a);
        })};
        c.sampler = sampler({q_range(), var_range(x), var_range(lam), var_range(t)}, a_on_q_powers);
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            const NCtx k(S, cfg);
            return single_sum(k, cfg, [](const NCtx& c, InvQfac& iq, int n) {
                const BigRational Q = c.q();
                return hahn_psi<BigRational>(n, c(a), c(x), Q) * qpoch(c(lam).inverse(), Q, n) *
                       (c(lam) * c(t) * Q).pow(n) * iq(n);
            });
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& c) {
                const BigRational Q = c.q(), xt = c(x) * c(t);
                return c.inf(Q / c(x)) * c.inf(xt * Q) * c.inv(c(a) * Q) * c.inv(c(lam) * xt * Q) *
                       c.phi({c.sc((c(a) * c(x)).inverse()), c.sc(xt.inverse())},
                             {c.sc(Q / c(x)), c.sc((c(lam) * xt).inverse())}, c.sc(c(a) * Q / c(lam)));
            });
        };
        c.notes.push_back("alpha sampled on q^m, m = 1..3, where the left-hand sum converges");
        reg.push_back(std::move(c));
    }
    {
        auto e = analytic("1sdss", "transformation of 2phi1 into 3phi2", {q, a, b, Sym::c, z});
        e.constraints = {bound("|z| < 1", [](const Assignment& p) { return p.at(z); }),
                         bound("|abz/c| < 1", [](const Assignment& p) { return p.at(a) * p.at(b) * p.at(z) / p.at(c); })};
        e.sampler = sampler({q_range(), var_range(a, BigRational(3, 4)), var_range(b, BigRational(3, 4)),
                             var_range(c, BigRational(3, 4)), var_range(z)});
        e.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            const NCtx k(S, cfg);
            return k.phi({k.sc(k(a)), k.sc(k(b))}, {k.sc(k(c))}, k.sc(k(z)));
        };
        e.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int) {
            return adaptive(S, cfg, [](const NCtx& k) {
                const BigRational azc = k(a) * k(z) / k(c);
                return k.inf(azc * k(b)) * k.inv(azc) *
                       k.phi({k.sc(k(b)), k.sc(k(c) / k(a)), k.zero()}, {k.sc(k.q() / azc), k.sc(k(c))},
                             k.sc(k.q()));
            });
        };
        e.notes.push_back("|z| < 1 is the convergence condition of the 2phi1; no constraint is printed");
        reg.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- reductions
    {
        auto c = formal("reduction-a", "shifted generating functions at s = 0 reduce to the unshifted ones", {t},
                        {q, A, x, y, b});
        c.instances = 2;
        c.instance_name = "side";
        set_formal(
            c, [](const auto& S, int N, int i) { return exd_rhs(S, N, 0, i == 1); },
            [](const auto& S, int N, int i) { return i == 0 ? ler_rhs(S, N) : lerr_rhs(S, N); });
        c.notes.push_back("instance 0: C_n side, instance 1: D_n side");
        reg.push_back(std::move(c));
    }
    {
        auto c = formal("reduction-b", "lambda = 0 reduces the (lambda;q)_n generating functions", {t}, {q, A, x, y, b});
        c.instances = 2;
        c.instance_name = "side";
        set_formal(
            c, [](const auto& S, int N, int i) { return at_zero(gs_rhs(S, N, i == 1), lam); },
            [](const auto& S, int N, int i) { return i == 0 ? ler_rhs(S, N) : lerr_rhs(S, N); });
        c.notes.push_back("instance 0: C_n side, instance 1: D_n side");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("reduction-c", "v = 0 reduces the bilinear generating functions to the Cao-Niu ones",
                          {q, a, x, u, b, B, t});
        c.instances = 4;
        c.instance_name = "part";
        c.constraints = {bound("|x| < 1", [](const Assignment& p) { return p.at(x); }),
                         bound("|ut| < 1", [](const Assignment& p) { return p.at(u) * p.at(t); }),
                         bound("|q^beta bt| < 1", [](const Assignment& p) { return p.at(B) * p.at(b) * p.at(t); }),
                         bound("|alpha q| < 1", [](const Assignment& p) { return p.at(a) * p.at(q); }),
                         bound("|bxtq^(beta+1)| < 1",
                               [](const Assignment& p) { return p.at(b) * p.at(x) * p.at(t) * p.at(q) * p.at(B); })};
        c.sampler = sampler({q_range(), var_range(a), var_range(x), var_range(u), var_range(b),
                             var_range(B, BigRational(3, 4)), var_range(t)});
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int i) {
            const Scalars<BigRational> S0 = with_v0(S);
            switch (i) {
            case 0: return adaptive(S0, cfg, [](const NCtx& k) { return sums1_rhs(k); });
            case 1: return adaptive(S0, cfg, [](const NCtx& k) { return sums2_rhs(k); });
            case 2: return partial_sum(NCtx(S0, cfg), sums1_term, 30);
            default: return partial_sum(NCtx(S0, cfg), sums2_term, 30);
            }
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int i) {
            switch (i) {
            case 0: return adaptive(S, cfg, [](const NCtx& k) { return s1_rhs(k); });
            case 1: return adaptive(S, cfg, [](const NCtx& k) { return s2_rhs(k); });
            case 2: return partial_sum(NCtx(S, cfg), s1_term, 30);
            default: return partial_sum(NCtx(S, cfg), s2_term, 30);
            }
        };
        c.notes.push_back("parts: 0/1 right-hand sides (phi and psi side), 2/3 first 30 left-hand terms, exact");
        c.notes.push_back("the psi-side 3phi3 is evaluated in a form regular at v = 0");
        reg.push_back(std::move(c));
    }
    {
        auto c = analytic("reduction-d", "s = 0 collapses the extended Rogers formulas to the Rogers formulas",
                          {q, A, x, y, b, t, w});
        c.instances = 4;
        c.instance_name = "part";
        c.constraints = {bound("|t/omega| < 1", [](const Assignment& p) { return p.at(t) / p.at(w); }),
                         bound("|x omega| < 1", [](const Assignment& p) { return p.at(x) * p.at(w); }),
                         bound("|y omega| < 1", [](const Assignment& p) { return p.at(y) * p.at(w); }),
                         bound("|q^alpha b omega| < 1", [](const Assignment& p) { return p.at(A) * p.at(b) * p.at(w); })};
        c.sampler = sampler({q_range(), var_range(A, BigRational(3, 4)), var_range(x), var_range(y), var_range(b),
                             var_range(t), var_range(w, BigRational(3, 4))});
        c.lhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int i) {
            const Scalars<BigRational> S0 = with_s0(S);
            const bool dual = i >= 2;
            if (i % 2 == 0) return gextend_lhs(NCtx(S0, cfg), cfg, dual);
            return adaptive(S0, cfg, [dual](const NCtx& k) { return gextend_rhs(k, dual); });
        };
        c.rhs_value = [](const Scalars<BigRational>& S, const NumericConfig& cfg, int i) {
            // Rogers formulas in the variables (t, omega)
            const Scalars<BigRational> Sw = S.with_override(s, S.sym(w));
            const bool dual = i >= 2;
            if (i % 2 == 0) return exgen_lhs(NCtx(Sw, cfg), cfg, dual);
            return adaptive(Sw, cfg, [dual](const NCtx& k) { return exgen_rhs(k, dual); });
        };
        c.notes.push_back("parts: 0 left/1 right for C_n, 2 left/3 right for D_n; (s/t;q)_inf -> 1 at s = 0");
        reg.push_back(std::move(c));
    }
    return reg;
}

// Attempts the right-hand side of each analytic entry through phi_formal.
void probe_formal_summability(std::vector<IdentityCheck>& reg) {
    const RS S;
    auto rejects = [](auto&& f) {
        try {
            f();
        } catch (const NotFormallySummable&) {
            return true;
        }
        return false;
    };
    using P = PhiParam<RatFunc>;
    const RatFunc Q = RatFunc::var(q), one(1);
    auto R = [](Sym s) { return RatFunc::var(s); };
    std::map<std::string, std::function<void()>> probes;
    auto exgen_probe = [&](bool dual) {
        return [=] {
            Ctx c(S, {t, s}, 1);
            const RatFunc X = R(dual ? y : x), Y = R(dual ? x : y);
            c.phi({c.on(X, s), c.on(R(A) * R(b), s), c.zero(), c.zero()},
                  {P::with(Q, c.d(s) - c.d(t)), c.on(Y, s), c.on(R(b), s)}, c.sc(Q));
        };
    };
    probes["exgen"] = exgen_probe(false);
    probes["2exgen"] = exgen_probe(true);
    auto gextend_probe = [&](bool dual) {
        return [=] {
            Ctx c(S, {t, s, w}, 1);
            const RatFunc X = R(dual ? y : x), Y = R(dual ? x : y);
            c.phi({c.on(X, w), c.on(R(A) * R(b), w), c.zero(), c.zero()},
                  {c.on(Y, w), c.on(R(b), w), P::with(Q, c.d(w) - c.d(t))}, c.sc(Q));
        };
    };
    probes["gextend"] = gextend_probe(false);
    probes["2gextend"] = gextend_probe(true);
    probes["1sums"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(R(a)), c.on(R(u), t), c.on(R(B) * R(b), t), c.zero()}, {c.sc(Q / R(x)), c.on(R(v), t), c.on(R(b), t)},
              c.sc(Q));
    };
    probes["1s"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(R(a)), c.on(R(u), t), c.on(R(B) * R(b), t)}, {c.sc(Q / R(x)), c.on(R(b), t)}, c.sc(Q));
    };
    probes["2sums"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(one / (R(a) * R(x))), c.on(one / (R(u) * R(x)), t, -1), c.on(one / (R(b) * R(x)), t, -1)},
              {c.sc(Q / R(x)), c.on(one / (R(v) * R(x)), t, -1), c.on(one / (R(B) * R(b) * R(x)), t, -1)},
              c.sc(R(a) * R(u) * Q / (R(B) * R(v))));
    };
    probes["2s"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(one / (R(a) * R(x))), c.on(one / (R(u) * R(x)), t, -1), c.on(one / (R(b) * R(x)), t, -1)},
              {c.sc(Q / R(x)), c.on(one / (R(B) * R(b) * R(x)), t, -1)}, c.on(R(a) * R(u) * R(x) * Q / R(B), t));
    };
    probes["c1sums"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(one / R(lam)), c.sc(one / (R(a) * R(x)))}, {c.on(one / (R(lam) * R(x)), t, -1)}, c.sc(R(a) * Q));
    };
    probes["1ss"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(R(a)), c.on(one, t), c.zero()}, {c.sc(Q / R(x)), c.on(R(lam), t)}, c.sc(Q));
    };
    probes["2ss"] = [&] {
        Ctx c(S, {t}, 1);
        c.phi({c.sc(one / (R(a) * R(x))), c.on(one / R(x), t, -1)}, {c.sc(Q / R(x)), c.on(one / (R(lam) * R(x)), t, -1)},
              c.sc(R(a) * Q / R(lam)));
    };
    probes["1sdss"] = [&] {
        // z as the expansion variable t
        Ctx k(S, {t}, 1);
        k.phi({k.sc(R(b)), k.sc(R(c) / R(a)), k.zero()}, {k.on(Q * R(c) / R(a), t, -1), k.sc(R(c))}, k.sc(Q));
    };
    for (auto& c : reg) {
        auto it = probes.find(c.id);
        if (it == probes.end()) continue;
        c.rhs_not_formal = rejects(it->second);
        if (c.rhs_not_formal && c.mode != Mode::Analytic)
            throw std::logic_error("entry " + c.id + " is rejected by phi_formal but not registered Analytic");
    }
}

} // namespace

const std::vector<IdentityCheck>& registry() {
    static const std::vector<IdentityCheck> reg = [] {
        auto r = build_registry();
        probe_formal_summability(r);
        std::sort(r.begin(), r.end(), [](const IdentityCheck& l, const IdentityCheck& rr) { return l.id < rr.id; });
        return r;
    }();
    return reg;
}

const IdentityCheck& find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw ConfigError("unknown identity '" + id + "'");
}

std::vector<const IdentityCheck*> select_checks(const std::string& suite) {
    std::vector<const IdentityCheck*> out;
    auto is_reduction = [](const IdentityCheck& c) { return c.id.rfind("reduction-", 0) == 0; };
    if (suite == "all" || suite == "formal" || suite == "analytic" || suite == "reductions") {
        for (const auto& c : registry()) {
            const bool red = is_reduction(c);
            if (suite == "all" || (suite == "reductions" && red) ||
                (suite == "formal" && !red && c.mode != Mode::Analytic) ||
                (suite == "analytic" && !red && c.mode == Mode::Analytic))
                out.push_back(&c);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= suite.size()) {
        const std::size_t end = std::min(suite.find(',', start), suite.size());
        const std::string id = suite.substr(start, end - start);
        if (!id.empty()) {
            const IdentityCheck* hit = nullptr;
            for (const auto& c : registry())
                if (c.id == id) hit = &c;
            if (!hit && id == "exdddgen") {
                for (const auto& c : registry())
                    if (c.id.rfind("exdddgen-", 0) == 0) out.push_back(&c);
            } else if (!hit && id == "sexdddgen") {
                for (const auto& c : registry())
                    if (c.id.rfind("sexdddgen-", 0) == 0) out.push_back(&c);
            } else if (!hit) {
                throw ConfigError("unknown identity '" + id + "'");
            } else {
                out.push_back(hit);
            }
        }
        start = end + 1;
    }
    std::sort(out.begin(), out.end(), [](auto* l, auto* r) { return l->id < r->id; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace qident
