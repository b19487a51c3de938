#ifndef QIDENT_NUMERIC_HPP
#define QIDENT_NUMERIC_HPP

#include <functional>
#include <optional>
#include <string>

#include "qident/qcore.hpp"

namespace qident {

/// Exact rational center with a rigorous error radius.
struct Ball {
    BigRational mid{0};
    BigRational rad{0};

    Ball() = default;
    Ball(BigRational m, BigRational r = BigRational(0)) : mid(std::move(m)), rad(std::move(r)) {} // NOLINT

    friend Ball operator+(const Ball& a, const Ball& b) { return {a.mid + b.mid, a.rad + b.rad}; }
    friend Ball operator-(const Ball& a, const Ball& b) { return {a.mid - b.mid, a.rad + b.rad}; }
    friend Ball operator-(const Ball& a) { return {-a.mid, a.rad}; }
    friend Ball operator*(const Ball& a, const Ball& b) {
        return {a.mid * b.mid, abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad};
    }
    Ball& operator+=(const Ball& o) { return *this = *this + o; }
    Ball& operator*=(const Ball& o) { return *this = *this * o; }
    /// Throws DivisionByZero when the ball contains 0.
    Ball inverse() const;
    friend Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }
    /// Largest absolute value in the ball.
    BigRational magnitude() const { return abs(mid) + rad; }
    /// Replaces the center by a dyadic approximation, adding the rounding error to the radius.
    Ball rounded(unsigned bits) const;
    std::string to_string(int digits = 40) const;
};

struct NumericConfig {
    /// Target for every certified tail / radius.
    BigRational tail_target = pow10_neg(30);
    /// Maximal number of terms / factors.
    int kmax = 5000;
    /// Ratio bounds must stay below 1 - margin.
    BigRational margin = BigRational(1, 16);
};

/// (a;q)_inf for |q| < 1 with radius <= target.
Ball qpoch_inf_ball(const BigRational& a, const BigRational& q, const BigRational& target, int kmax = 5000);
/// 1/(a;q)_inf; DivisionByZero when a = q^-k.
Ball qpoch_inf_inverse_ball(const BigRational& a, const BigRational& q, const BigRational& target, int kmax = 5000);

struct NumericSum {
    BigRational value{0};   ///< exact partial sum
    BigRational tail{0};    ///< bound on the omitted terms
    int terms = 0;          ///< number of summed terms
};

/// Sum of a series given by its first term and term ratio r(n) = t_{n+1}/t_n.
/// `bound(K)` returns a rigorous bound on |r(n)| for all n >= K, or nothing if
/// none is available yet. Throws TailNotBounded when kmax is reached.
NumericSum sum_by_ratio(const BigRational& first, const std::function<BigRational(int)>& ratio,
                        const std::function<std::optional<BigRational>(int)>& bound,
                        const NumericConfig& cfg, std::optional<int> terminates_after = std::nullopt);

/// phi_numeric for an rPhis with rational parameters (expansion monomials must be trivial).
NumericSum phi_numeric(const PhiSpec<BigRational>& spec, const BigRational& q, const NumericConfig& cfg);

/// Sum of g(0) + g(1) + ... with the empirical stopping rule: the last eight
/// consecutive ratios |g(N+1)/g(N)| stay below rho <= 1 - margin, and then
/// tail <= |g(K)| rho/(1 - rho) <= target.
NumericSum sum_empirical(const std::function<BigRational(int)>& g, const NumericConfig& cfg);

/// Throws DomainViolation unless 0 < |q| < 1.
void require_unit_disc(const BigRational& q);

} // namespace qident

#endif // QIDENT_NUMERIC_HPP
