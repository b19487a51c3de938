#ifndef QIDENT_RATIONAL_HPP
#define QIDENT_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qident {

/// Arbitrary-precision rational in lowest terms with positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}                     // NOLINT: implicit by design of the number tower
    BigRational(int v) : v_(static_cast<long>(v)) {}   // NOLINT
    BigRational(long num, long den);
    explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    BigRational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p", "p/q", decimals ("0.25") and scientific notation ("1e-25").
    static BigRational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }
    /// Throws DivisionByZero on zero.
    BigRational inverse() const;
    /// Integer power; negative exponents invert (DivisionByZero on 0).
    BigRational pow(long e) const;

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double to_double() const { return v_.get_d(); }
    /// "p" or "p/q".
    std::string to_string() const;
    /// Fixed-point decimal rendering truncated toward zero to `digits` fractional digits.
    std::string to_decimal(int digits) const;
    /// Short scientific rendering such as "3.2e-31" (for witnesses and logs).
    std::string to_sci(int digits = 3) const;

    /// Smallest dyadic m/2^k >= |this| with k chosen so the relative excess is
    /// below 2^-bits; used to keep error radii cheap.
    BigRational round_up_dyadic(unsigned bits = 64) const;

    /// floor(log2 |x|) for nonzero x.
    long log2_floor() const;

    std::size_t hash() const;

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

inline BigRational abs(const BigRational& r) { return r.abs(); }
inline const BigRational& max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

/// 10^-k as an exact rational.
BigRational pow10_neg(int k);

} // namespace qident

#endif // QIDENT_RATIONAL_HPP
