#ifndef QIDENT_FIELD_HPP
#define QIDENT_FIELD_HPP

#include <array>
#include <optional>

#include "qident/ratfunc.hpp"

namespace qident {

/// Coefficient-field context. With K = RatFunc symbols stay symbolic unless
/// bound; with K = BigRational every symbol used must be bound. Overrides
/// replace a symbol's value (used for perturbed right-hand sides).
template <class K>
class Scalars;

template <>
class Scalars<RatFunc> {
public:
    using value_type = RatFunc;
    Scalars() = default;
    explicit Scalars(Assignment bound) : bound_(std::move(bound)) {}

    RatFunc sym(Sym s) const {
        if (override_[idx(s)]) return *override_[idx(s)];
        if (bound_.bound(s)) return RatFunc(bound_.at(s));
        return RatFunc::var(s);
    }
    RatFunc lift(const MultiPoly& p) const { return lift(RatFunc(p)); }
    RatFunc lift(const RatFunc& r) const {
        bool any = false;
        for (const auto& o : override_) any = any || o.has_value();
        if (!any) return r.partial_eval(bound_);
        // Simultaneous substitution, term by term.
        auto poly = [&](const MultiPoly& p) {
            std::vector<RatFunc> terms;
            for (const auto& [m, c] : p.terms()) {
                RatFunc t(c);
                for (std::size_t i = 0; i < kSymbolCount; ++i)
                    if (m.e[i]) t *= sym(static_cast<Sym>(i)).pow(m.e[i]);
                terms.push_back(std::move(t));
            }
            return RatFunc::sum(terms);
        };
        RatFunc out = poly(r.num());
        for (const auto& f : r.den_factors()) out /= poly(f.atom.get()).pow(f.mult);
        return out;
    }
    RatFunc constant(const BigRational& c) const { return RatFunc(c); }

    Scalars with_override(Sym s, RatFunc value) const {
        Scalars out = *this;
        out.override_[idx(s)] = std::move(value);
        return out;
    }
    const Assignment& bound() const { return bound_; }
    bool symbolic(Sym s) const { return !bound_.bound(s) && !override_[idx(s)]; }
    /// No bindings and no overrides.
    bool pristine() const {
        for (const auto& o : override_)
            if (o) return false;
        return bound_.mask().none();
    }

private:
    Assignment bound_;
    std::array<std::optional<RatFunc>, kSlots> override_{};
};

template <>
class Scalars<BigRational> {
public:
    using value_type = BigRational;
    Scalars() = default;
    explicit Scalars(Assignment values) : values_(std::move(values)) {}

    BigRational sym(Sym s) const { return values_.at(s); }
    BigRational lift(const MultiPoly& p) const { return p.eval(values_); }
    BigRational lift(const RatFunc& r) const { return r.eval(values_); }
    BigRational constant(const BigRational& c) const { return c; }

    Scalars with_override(Sym s, BigRational value) const {
        Scalars out = *this;
        out.values_.set(s, std::move(value));
        return out;
    }
    const Assignment& bound() const { return values_; }
    bool symbolic(Sym) const { return false; }
    bool pristine() const { return false; }

private:
    Assignment values_;
};

} // namespace qident

#endif // QIDENT_FIELD_HPP
