#include "qident/numeric.hpp"

#include <deque>

namespace qident {

Ball Ball::inverse() const {
    const BigRational m = abs(mid);
    if (m <= rad) throw DivisionByZero("inverse of a ball containing zero");
    // |1/x - 1/mid| <= rad/(|mid| (|mid| - rad))
    return {mid.inverse(), (rad / (m * (m - rad))).round_up_dyadic()};
}

Ball Ball::rounded(unsigned bits) const {
    if (mid.is_zero()) return *this;
    const long e = mid.log2_floor() - static_cast<long>(bits);
    // floor(mid * 2^-e) * 2^e
    const BigRational scale = BigRational(2).pow(-e);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), (mid * scale).numerator().get_mpz_t(), (mid * scale).denominator().get_mpz_t());
    BigRational approx = BigRational(n, mpz_class(1)) / scale;
    return {approx, (rad + abs(mid - approx)).round_up_dyadic()};
}

std::string Ball::to_string(int digits) const { return mid.to_decimal(digits) + " +/- " + rad.to_sci(); }

void require_unit_disc(const BigRational& q) {
    if (q.is_zero() || abs(q) >= BigRational(1)) throw DomainViolation("|q| must lie in (0,1), got q = " + q.to_string());
}

namespace {

// Partial product over k < K plus the factor bound r = |a| |q|^K/(1-|q|): the
// tail product lies within relative distance 4r of 1 when r <= 1/4.
struct PartialProduct {
    BigRational value{1};
    BigRational r{0};
    bool exact = false;
};

PartialProduct partial_product(const BigRational& a, const BigRational& q, const BigRational& target, int kmax,
                               const BigRational& slack) {
    require_unit_disc(q);
    PartialProduct p;
    if (a.is_zero()) {
        p.exact = true;
        return p;
    }
    const BigRational aq = abs(q), one_minus = BigRational(1) - aq;
    BigRational aqk = a; // a q^k
    for (int k = 0; k < kmax; ++k) {
        const BigRational r = abs(aqk) / one_minus;
        if (r <= BigRational(1, 4) && abs(p.value) * r * slack <= target) {
            p.r = r;
            return p;
        }
        const BigRational f = BigRational(1) - aqk;
        if (f.is_zero()) {
            p.value = BigRational(0);
            p.exact = true;
            return p;
        }
        p.value *= f;
        aqk *= q;
    }
    throw TailNotBounded("infinite product did not reach the requested accuracy within kmax factors");
}

} // namespace

Ball qpoch_inf_ball(const BigRational& a, const BigRational& q, const BigRational& target, int kmax) {
    const PartialProduct p = partial_product(a, q, target, kmax, BigRational(4));
    if (p.exact) return Ball(p.value);
    return {p.value, (abs(p.value) * 4 * p.r).round_up_dyadic()};
}

Ball qpoch_inf_inverse_ball(const BigRational& a, const BigRational& q, const BigRational& target, int kmax) {
    require_unit_disc(q);
    // |1/P_K| 8r <= target needs the size of 1/P_K; start from a crude bound and tighten.
    BigRational slack(8);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const PartialProduct p = partial_product(a, q, target, kmax, slack);
        if (p.value.is_zero()) throw DivisionByZero("(a;q)_inf vanishes: a = q^-k");
        const BigRational inv = p.value.inverse();
        if (p.exact) return Ball(inv);
        const BigRational rad = abs(inv) * 8 * p.r;
        if (rad <= target) return {inv, rad.round_up_dyadic()};
        slack *= (rad / target) * 8 / abs(p.value) + 1;
    }
    throw TailNotBounded("inverse product did not reach the requested accuracy");
}

NumericSum sum_by_ratio(const BigRational& first, const std::function<BigRational(int)>& ratio,
                        const std::function<std::optional<BigRational>(int)>& bound, const NumericConfig& cfg,
                        std::optional<int> terminates_after) {
    NumericSum out;
    BigRational term = first;
    const BigRational rho_max = BigRational(1) - cfg.margin;
    for (int n = 0;; ++n) {
        out.value += term;
        out.terms = n + 1;
        if (term.is_zero() || (terminates_after && n >= *terminates_after)) return out;
        if (n >= cfg.kmax) break;
        if (!terminates_after) {
            // t_{m+1} = t_m r(m) with |r(m)| <= rho for every m >= n
            if (auto rho = bound(n); rho && *rho <= rho_max) {
                const BigRational tail = abs(term) * *rho / (BigRational(1) - *rho);
                if (tail <= cfg.tail_target) {
                    out.tail = tail.round_up_dyadic();
                    return out;
                }
            }
        }
        term *= ratio(n);
    }
    throw TailNotBounded("series tail not certified below " + cfg.tail_target.to_sci() + " within " +
                         std::to_string(cfg.kmax) + " terms");
}

NumericSum phi_numeric(const PhiSpec<BigRational>& spec, const BigRational& q, const NumericConfig& cfg) {
    require_unit_disc(q);
    auto scalar_only = [](const PhiParam<BigRational>& p) {
        if (!p.zero && !is_zero_deg(p.mono)) throw MissingExpansionVar("phi_numeric takes rational parameters only");
    };
    for (const auto& p : spec.upper) scalar_only(p);
    for (const auto& p : spec.lower) scalar_only(p);
    scalar_only(spec.argument);
    const BigRational z = spec.argument.zero ? BigRational(0) : spec.argument.coeff;
    const int e = spec.extra_exponent();
    const BigRational aq = abs(q);

    auto ratio = [&](int n) {
        const BigRational qn = q.pow(n);
        BigRational r = z / (BigRational(1) - qn * q);
        for (const auto& p : spec.upper)
            if (!p.zero) r *= BigRational(1) - p.coeff * qn;
        for (const auto& p : spec.lower) {
            if (p.zero) continue;
            const BigRational d = BigRational(1) - p.coeff * qn;
            if (d.is_zero()) throw DivisionByZero("lower parameter hits q^-n");
            r /= d;
        }
        const BigRational f = -qn;
        for (int i = 0; i < e; ++i) r *= f;
        for (int i = 0; i < -e; ++i) r /= f;
        return r;
    };
    auto bound = [&](int K) -> std::optional<BigRational> {
        if (e < 0) return std::nullopt;
        const BigRational qK = aq.pow(K);
        BigRational b = abs(z) / (BigRational(1) - qK * aq) * qK.pow(e);
        for (const auto& p : spec.upper)
            if (!p.zero) b *= BigRational(1) + abs(p.coeff) * qK;
        for (const auto& p : spec.lower) {
            if (p.zero) continue;
            const BigRational d = BigRational(1) - abs(p.coeff) * qK;
            if (d.sign() <= 0) return std::nullopt;
            b /= d;
        }
        return b;
    };
    return sum_by_ratio(BigRational(1), ratio, bound, cfg, spec.terminates_after);
}

NumericSum sum_empirical(const std::function<BigRational(int)>& g, const NumericConfig& cfg) {
    constexpr int kWindow = 8;
    const BigRational rho_max = BigRational(1) - cfg.margin;
    NumericSum out;
    std::deque<BigRational> last; // |g| of the most recent terms
    for (int n = 0; n <= cfg.kmax; ++n) {
        const BigRational v = g(n);
        out.value += v;
        out.terms = n + 1;
        last.push_back(abs(v));
        if (static_cast<int>(last.size()) > kWindow + 1) last.pop_front();
        if (static_cast<int>(last.size()) < kWindow + 1) continue;
        BigRational rho(0), peak(0);
        bool ok = true;
        for (int i = 1; i <= kWindow && ok; ++i) {
            const BigRational& prev = last[static_cast<std::size_t>(i) - 1];
            const BigRational& cur = last[static_cast<std::size_t>(i)];
            peak = max(peak, cur);
            if (cur.is_zero()) continue;
            if (prev.is_zero()) {
                ok = false;
                break;
            }
            rho = max(rho, cur / prev);
        }
        if (!ok || rho > rho_max) continue;
        if (peak.is_zero()) return out; // eight zero terms in a row: treat as terminated
        const BigRational tail = peak * rho / (BigRational(1) - rho);
        if (tail <= cfg.tail_target) {
            out.tail = tail.round_up_dyadic();
            return out;
        }
    }
    throw TailNotBounded("multi-sum terms did not settle below ratio " + rho_max.to_sci() + " within " +
                         std::to_string(cfg.kmax) + " terms");
}

} // namespace qident
