#ifndef QIDENT_MULTIPOLY_HPP
#define QIDENT_MULTIPOLY_HPP

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qident/rational.hpp"
#include "qident/symbols.hpp"

namespace qident {

/// Exponent vector indexed by symbol slot.
struct Monomial {
    std::array<std::int16_t, kSlots> e{};

    static Monomial var(Sym s, int power = 1) {
        Monomial m;
        m.e[idx(s)] = static_cast<std::int16_t>(power);
        return m;
    }
    int operator[](Sym s) const { return e[idx(s)]; }
    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }
    int total_degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < kSlots; ++i) e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial inverse() const {
        Monomial m;
        for (std::size_t i = 0; i < kSlots; ++i) m.e[i] = static_cast<std::int16_t>(-e[i]);
        return m;
    }
    Monomial pow(int k) const {
        Monomial m;
        for (std::size_t i = 0; i < kSlots; ++i) m.e[i] = static_cast<std::int16_t>(e[i] * k);
        return m;
    }
    /// True if some non-invertible symbol carries a negative exponent.
    bool violates_invertibility() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < kSlots; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Values for a subset of the symbols.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<std::pair<Sym, BigRational>> init) {
        for (auto& [s, v] : init) set(s, v);
    }
    void set(Sym s, BigRational v) {
        val_[idx(s)] = std::move(v);
        bound_.set(idx(s));
    }
    void unset(Sym s) { bound_.reset(idx(s)); }
    bool bound(Sym s) const { return bound_.test(idx(s)); }
    const BigRational& at(Sym s) const;
    std::bitset<kSlots> mask() const { return bound_; }

private:
    std::array<BigRational, kSlots> val_{};
    std::bitset<kSlots> bound_{};
};

/// Sparse Laurent polynomial over Q in the standard symbols.
class MultiPoly {
public:
    using Term = std::pair<Monomial, BigRational>;

    MultiPoly() = default;
    MultiPoly(const BigRational& c);                     // NOLINT
    MultiPoly(long c) : MultiPoly(BigRational(c)) {}     // NOLINT
    MultiPoly(int c) : MultiPoly(BigRational(c)) {}      // NOLINT
    static MultiPoly var(Sym s, int power = 1);
    static MultiPoly monomial(const Monomial& m, BigRational c = BigRational(1));
    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    BigRational constant_term() const;
    /// Value of a constant polynomial; throws if not constant.
    BigRational constant_value() const;

    int degree_in(Sym s) const;
    int min_degree_in(Sym s) const;
    bool contains(Sym s) const;
    std::bitset<kSlots> support() const;
    /// Symbols of the support, in registry order.
    std::vector<Sym> free_symbols() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const BigRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    MultiPoly mul_monomial(const Monomial& m, const BigRational& c = BigRational(1)) const;
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Replaces s^e by (factor)^e * s^e, i.e. the substitution s -> factor * s.
    MultiPoly scale_var(Sym s, const Monomial& factor, const BigRational& c = BigRational(1)) const;
    /// Substitution of a polynomial for one symbol (exponent of s must be non-negative
    /// unless value is a monomial).
    MultiPoly substitute(Sym s, const MultiPoly& value) const;
    /// Replaces every bound symbol by its value.
    MultiPoly partial_eval(const Assignment& at) const;
    /// Requires every symbol of the support to be bound.
    BigRational eval(const Assignment& at) const;

    /// Exact quotient p / d viewing both as univariate in pivot. Throws
    /// NotDivisible on a nonzero remainder or a non-monomial leading coefficient.
    MultiPoly div_exact_in(const MultiPoly& d, Sym pivot) const;
    /// Exact quotient when the division succeeds, empty optional otherwise.
    bool try_div_exact_in(const MultiPoly& d, Sym pivot, MultiPoly& quotient) const;

    /// Probabilistic filter for divisibility: false means certainly not
    /// divisible by d (d's leading coefficient in pivot must be a monomial).
    bool maybe_divisible_in(const MultiPoly& d, Sym pivot) const;

    /// Coefficients as a polynomial in s: exponent -> coefficient free of s.
    std::map<int, MultiPoly> collect(Sym s) const;

    /// Positive rational c with p = c * primitive, primitive having coprime
    /// integer coefficients and a positive first term.
    BigRational content() const;
    MultiPoly primitive() const;

    std::size_t hash() const;

    /// Rendering: groups by variable monomials in graded lexicographic order,
    /// parameters (q, A, B, a, c, z, lambda) collected into coefficients.
    std::string to_string() const;

private:
    std::vector<Term> terms_; // sorted by Monomial, no zero coefficients
    void normalize();
    friend class RatFunc;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Graded lexicographic order used for rendering: higher total degree first,
/// then larger exponent of the earlier symbol first.
bool grlex_greater(const Monomial& a, const Monomial& b);

} // namespace qident

#endif // QIDENT_MULTIPOLY_HPP
