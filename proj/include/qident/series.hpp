#ifndef QIDENT_SERIES_HPP
#define QIDENT_SERIES_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qident/errors.hpp"
#include "qident/ratfunc.hpp"

namespace qident {

/// Exponents of the expansion variables of a series, in the order of its vars.
using Deg = std::array<int, 3>;

inline int total(const Deg& d) { return d[0] + d[1] + d[2]; }
inline Deg operator+(const Deg& a, const Deg& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Deg operator-(const Deg& a, const Deg& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Deg scaled(const Deg& a, int k) { return {a[0] * k, a[1] * k, a[2] * k}; }
inline bool nonnegative(const Deg& d) { return d[0] >= 0 && d[1] >= 0 && d[2] >= 0; }
inline bool is_zero_deg(const Deg& d) { return d[0] == 0 && d[1] == 0 && d[2] == 0; }

inline bool is_zero_value(const RatFunc& r) { return r.is_zero(); }
inline bool is_zero_value(const BigRational& r) { return r.is_zero(); }
inline bool equal_values(const RatFunc& a, const RatFunc& b) { return equal(a, b); }
inline bool equal_values(const BigRational& a, const BigRational& b) { return a == b; }
inline RatFunc sum_values(std::vector<RatFunc>& v) { return RatFunc::sum(v); }
inline BigRational sum_values(std::vector<BigRational>& v) {
    BigRational s(0);
    for (auto& x : v) s += x;
    return s;
}
inline std::string value_string(const RatFunc& r) { return r.to_string(); }
inline std::string value_string(const BigRational& r) { return r.to_string(); }

/// Truncated power series in up to three expansion variables, truncated by
/// total degree, with coefficients in K (RatFunc or BigRational).
template <class K>
class TruncSeries {
public:
    TruncSeries(std::vector<Sym> vars, int order) : vars_(std::move(vars)), order_(order) {
        if (vars_.size() > 3) throw Error("at most three expansion variables");
        std::sort(vars_.begin(), vars_.end());
        if (order_ < 0) throw Error("negative truncation order");
        coeffs_.assign(size_for(vars_.size(), order_), K(0));
    }
    static TruncSeries constant(std::vector<Sym> vars, int order, const K& c) {
        TruncSeries s(std::move(vars), order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncSeries monomial(std::vector<Sym> vars, int order, const Deg& d, const K& c) {
        TruncSeries s(std::move(vars), order);
        if (total(d) <= order) s.at(d) = c;
        return s;
    }

    const std::vector<Sym>& vars() const noexcept { return vars_; }
    int order() const noexcept { return order_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Position of a symbol among the vars, or -1.
    int slot(Sym s) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == s) return static_cast<int>(i);
        return -1;
    }
    /// Degree vector of v^k for a var of this series.
    Deg unit(Sym s, int k = 1) const {
        int i = slot(s);
        if (i < 0) throw MissingExpansionVar("'" + std::string(sym_name(s)) + "' is not an expansion variable here");
        Deg d{0, 0, 0};
        d[static_cast<std::size_t>(i)] = k;
        return d;
    }

    /// series_coeff; throws OrderExceeded beyond the cap.
    const K& coeff(const Deg& d) const {
        check(d);
        return coeffs_[index(d)];
    }
    K& at(const Deg& d) {
        check(d);
        return coeffs_[index(d)];
    }
    const K& at_index(std::size_t i) const { return coeffs_[i]; }
    K& at_index(std::size_t i) { return coeffs_[i]; }

    /// All degree vectors of total degree <= order, by increasing total degree.
    std::vector<Deg> degrees() const { return degrees_for(vars_.size(), order_); }

    std::size_t index(const Deg& d) const {
        switch (vars_.size()) {
        case 0: return 0;
        case 1: return static_cast<std::size_t>(d[0]);
        case 2: {
            const std::size_t t = static_cast<std::size_t>(d[0] + d[1]);
            return t * (t + 1) / 2 + static_cast<std::size_t>(d[1]);
        }
        default: {
            const std::size_t t = static_cast<std::size_t>(d[0] + d[1] + d[2]);
            const std::size_t r = static_cast<std::size_t>(d[1] + d[2]);
            return t * (t + 1) * (t + 2) / 6 + r * (r + 1) / 2 + static_cast<std::size_t>(d[2]);
        }
        }
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        align(o);
        const TruncSeries b = o.embedded(vars_, order_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        align(o);
        const TruncSeries b = o.embedded(vars_, order_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    TruncSeries& operator*=(const K& c) {
        for (auto& x : coeffs_)
            if (!is_zero_value(x)) x *= c;
        return *this;
    }
    friend TruncSeries operator*(TruncSeries a, const K& c) { return a *= c; }

    /// series_mul: result order is the smaller order, vars the union.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        std::vector<Sym> vars = union_vars(a.vars_, b.vars_);
        const int order = std::min(a.order_, b.order_);
        const TruncSeries x = a.embedded(vars, order);
        const TruncSeries y = b.embedded(vars, order);
        const auto degs = x.degrees();
        std::vector<std::vector<K>> acc(x.coeffs_.size());
        for (std::size_t i = 0; i < degs.size(); ++i) {
            const K& xi = x.coeffs_[i];
            if (is_zero_value(xi)) continue;
            const int ti = total(degs[i]);
            for (std::size_t j = 0; j < degs.size(); ++j) {
                if (total(degs[j]) + ti > order) break;
                const K& yj = y.coeffs_[j];
                if (is_zero_value(yj)) continue;
                acc[x.index(degs[i] + degs[j])].push_back(xi * yj);
            }
        }
        TruncSeries out(vars, order);
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (!acc[k].empty()) out.coeffs_[k] = sum_values(acc[k]);
        return out;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    /// Multiplication by (1 - c * v^m), m nonzero and non-negative.
    TruncSeries mul_binomial(const K& c, const Deg& m) const {
        if (is_zero_deg(m)) return *this * (K(1) - c);
        TruncSeries out = *this;
        if (is_zero_value(c)) return out;
        for (const Deg& d : degrees()) {
            const Deg src = d - m;
            if (!nonnegative(src)) continue;
            const K& f = coeffs_[index(src)];
            if (!is_zero_value(f)) out.coeffs_[index(d)] -= c * f;
        }
        return out;
    }
    /// Division by (1 - c * v^m), m nonzero and non-negative.
    TruncSeries div_binomial(const K& c, const Deg& m) const {
        if (is_zero_deg(m)) {
            const K d = K(1) - c;
            if (is_zero_value(d)) throw DivisionByZero("division by a vanishing binomial");
            return *this * (K(1) / d);
        }
        TruncSeries out = *this;
        if (is_zero_value(c)) return out;
        for (const Deg& d : degrees()) {
            const Deg src = d - m;
            if (!nonnegative(src)) continue;
            const K& g = out.coeffs_[index(src)];
            if (!is_zero_value(g)) out.coeffs_[index(d)] += c * g;
        }
        return out;
    }
    /// Multiplication by v^m (m non-negative); terms beyond the cap drop.
    TruncSeries shifted(const Deg& m) const {
        if (!nonnegative(m)) throw NotFormallySummable("negative shift of a power series");
        TruncSeries out(vars_, order_);
        for (const Deg& d : degrees()) {
            if (total(d) + total(m) > order_) continue;
            out.coeffs_[index(d + m)] = coeffs_[index(d)];
        }
        return out;
    }

    /// series_reciprocal; throws NonUnitConstantTerm on a zero constant term.
    TruncSeries reciprocal() const {
        if (is_zero_value(coeffs_[0])) throw NonUnitConstantTerm("series has zero constant term");
        const K inv0 = K(1) / coeffs_[0];
        TruncSeries out(vars_, order_);
        out.coeffs_[0] = inv0;
        const auto degs = degrees();
        for (std::size_t k = 1; k < degs.size(); ++k) {
            const Deg& d = degs[k];
            std::vector<K> terms;
            for (std::size_t e = 1; e < degs.size() && total(degs[e]) <= total(d); ++e) {
                const Deg rest = d - degs[e];
                if (!nonnegative(rest)) continue;
                const K& a = coeffs_[e];
                const K& r = out.coeffs_[index(rest)];
                if (is_zero_value(a) || is_zero_value(r)) continue;
                terms.push_back(a * r);
            }
            if (!terms.empty()) out.coeffs_[index(d)] = -(sum_values(terms) * inv0);
        }
        return out;
    }

    TruncSeries truncated(int order) const { return embedded(vars_, std::min(order, order_)); }

    /// Same series viewed over a superset of variables / smaller order.
    TruncSeries embedded(const std::vector<Sym>& vars, int order) const {
        if (vars == vars_ && order == order_) return *this;
        TruncSeries out(vars, order);
        std::array<int, 3> map{-1, -1, -1};
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            map[i] = out.slot(vars_[i]);
            if (map[i] < 0) throw MissingExpansionVar("variable sets are not compatible");
        }
        for (const Deg& d : degrees()) {
            if (total(d) > order) break;
            Deg e{0, 0, 0};
            for (std::size_t i = 0; i < vars_.size(); ++i) e[static_cast<std::size_t>(map[i])] = d[i];
            out.coeffs_[out.index(e)] = coeffs_[index(d)];
        }
        return out;
    }

    template <class F>
    auto map(F&& f) const {
        using R = decltype(f(coeffs_[0]));
        TruncSeries<R> out(vars_, order_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.at_index(i) = f(coeffs_[i]);
        return out;
    }

    /// First degree (in increasing total order) where the series differ.
    std::optional<Deg> first_mismatch(const TruncSeries& o) const {
        std::vector<Sym> vars = union_vars(vars_, o.vars_);
        const int order = std::min(order_, o.order_);
        const TruncSeries a = embedded(vars, order), b = o.embedded(vars, order);
        for (const Deg& d : a.degrees())
            if (!equal_values(a.coeff(d), b.coeff(d))) return d;
        return std::nullopt;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return !a.first_mismatch(b); }

    /// "t^2*s" style rendering of a degree vector.
    std::string degree_string(const Deg& d) const {
        std::string out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!d[i]) continue;
            if (!out.empty()) out += "*";
            out += sym_name(vars_[i]);
            if (d[i] != 1) out += "^" + std::to_string(d[i]);
        }
        return out.empty() ? "1" : out;
    }

    static std::vector<Deg> degrees_for(std::size_t nv, int order) {
        std::vector<Deg> out;
        for (int t = 0; t <= order; ++t) {
            if (nv == 0) {
                if (t == 0) out.push_back({0, 0, 0});
            } else if (nv == 1) {
                out.push_back({t, 0, 0});
            } else if (nv == 2) {
                for (int b = 0; b <= t; ++b) out.push_back({t - b, b, 0});
            } else {
                for (int r = 0; r <= t; ++r)
                    for (int c = 0; c <= r; ++c) out.push_back({t - r, r - c, c});
            }
        }
        return out;
    }

private:
    std::vector<Sym> vars_;
    int order_;
    std::vector<K> coeffs_;

    static std::size_t size_for(std::size_t nv, int order) {
        const std::size_t n = static_cast<std::size_t>(order);
        switch (nv) {
        case 0: return 1;
        case 1: return n + 1;
        case 2: return (n + 1) * (n + 2) / 2;
        default: return (n + 1) * (n + 2) * (n + 3) / 6;
        }
    }
    void check(const Deg& d) const {
        if (!nonnegative(d)) throw OrderExceeded("negative degree vector");
        for (std::size_t i = vars_.size(); i < 3; ++i)
            if (d[i]) throw OrderExceeded("degree in a variable the series does not carry");
        if (total(d) > order_)
            throw OrderExceeded("degree " + std::to_string(total(d)) + " exceeds order " + std::to_string(order_));
    }
    void align(const TruncSeries& o) {
        std::vector<Sym> vars = union_vars(vars_, o.vars_);
        const int order = std::min(order_, o.order_);
        if (vars != vars_ || order != order_) *this = embedded(vars, order);
    }
    static std::vector<Sym> union_vars(const std::vector<Sym>& a, const std::vector<Sym>& b) {
        std::vector<Sym> out = a;
        for (Sym s : b)
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        std::sort(out.begin(), out.end());
        if (out.size() > 3) throw Error("at most three expansion variables");
        return out;
    }
};

} // namespace qident

#endif // QIDENT_SERIES_HPP
