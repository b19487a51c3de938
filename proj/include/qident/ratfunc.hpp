#ifndef QIDENT_RATFUNC_HPP
#define QIDENT_RATFUNC_HPP

#include <memory>
#include <string>
#include <vector>

#include "qident/multipoly.hpp"

namespace qident {

/// Normalized denominator factor: primitive, free of invertible monomial
/// content, shared between values.
struct DenAtom {
    std::shared_ptr<const MultiPoly> poly;
    std::size_t hash = 0;
    Sym pivot = Sym::q;

    const MultiPoly& get() const { return *poly; }
    friend bool operator==(const DenAtom& a, const DenAtom& b) {
        return a.hash == b.hash && (a.poly == b.poly || *a.poly == *b.poly);
    }
};

/// Quotient of a polynomial by a product of atom powers. Not canonical;
/// equality is decided by cross-multiplication over the common multiple of
/// both denominators.
class RatFunc {
public:
    struct Factor {
        DenAtom atom;
        int mult;
    };

    RatFunc() = default;
    RatFunc(MultiPoly num) : num_(std::move(num)) {}              // NOLINT
    RatFunc(const BigRational& c) : num_(c) {}                    // NOLINT
    RatFunc(long c) : num_(c) {}                                  // NOLINT
    RatFunc(int c) : num_(c) {}                                   // NOLINT
    static RatFunc var(Sym s, int power = 1) { return RatFunc(MultiPoly::var(s, power)); }
    /// num / den with den factored into atoms. Throws DivisionByZero on den = 0.
    static RatFunc fraction(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const noexcept { return num_; }
    /// Same denominator, new numerator (common factors cancelled).
    RatFunc with_numerator(MultiPoly num) const {
        RatFunc r = *this;
        r.num_ = std::move(num);
        return r.simplify();
    }
    const std::vector<Factor>& den_factors() const noexcept { return den_; }
    /// Expanded denominator.
    MultiPoly den() const;

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }
    bool is_constant() const noexcept { return den_.empty() && num_.is_constant(); }
    std::bitset<kSlots> support() const;
    bool contains(Sym s) const { return support().test(idx(s)); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend RatFunc operator-(const RatFunc& a);

    /// Sum over a common denominator with a single cancellation pass.
    static RatFunc sum(const std::vector<RatFunc>& terms);

    RatFunc inverse() const;
    RatFunc pow(int k) const;
    /// Cancels denominator atoms that divide the numerator.
    RatFunc& simplify();

    /// ratfunc_equal: a.num * b.den == b.num * a.den.
    friend bool equal(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return equal(a, b); }

    BigRational eval(const Assignment& at) const;
    RatFunc partial_eval(const Assignment& at) const;
    /// Substitution s -> value for one symbol.
    RatFunc substitute(Sym s, const RatFunc& value) const;
    /// Substitution s -> c * m * s.
    RatFunc scale_var(Sym s, const Monomial& m, const BigRational& c = BigRational(1)) const;

    std::string to_string() const;

private:
    MultiPoly num_;
    std::vector<Factor> den_; // sorted by atom hash

    void cancel_atom(std::size_t i);
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

/// Cyclotomic polynomial Phi_d in q.
MultiPoly cyclotomic(int d);

/// Factors a nonzero polynomial into a prefactor (rational times invertible
/// monomial, moved to the other side of the fraction line) and atoms.
struct AtomFactorization {
    BigRational scalar;
    Monomial monomial;
    std::vector<std::pair<DenAtom, int>> atoms;
};
AtomFactorization factor_atoms(const MultiPoly& p);

} // namespace qident

#endif // QIDENT_RATFUNC_HPP
