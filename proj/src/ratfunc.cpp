#include "qident/ratfunc.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "qident/errors.hpp"

namespace qident {

namespace {

// Integer coefficient vector of Phi_d(q), built by the Moebius product of
// (q^e - 1) over divisors e of d.
std::vector<long long> cyclotomic_coeffs(int d) {
    std::vector<long long> num{1}, den{1};
    auto mul_binom = [](std::vector<long long>& p, int e) { // p *= (q^e - 1)
        std::vector<long long> r(p.size() + static_cast<std::size_t>(e), 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i] -= p[i];
            r[i + static_cast<std::size_t>(e)] += p[i];
        }
        p = std::move(r);
    };
    auto mobius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        if (n > 1) m = -m;
        return m;
    };
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        const int mu = mobius(d / e);
        if (mu == 1) mul_binom(num, e);
        else if (mu == -1) mul_binom(den, e);
    }
    // Exact division num / den; den is monic up to sign.
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    const long long lc = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const long long f = num[k + den.size() - 1] / lc;
        quot[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
    }
    return quot;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

DenAtom make_atom(MultiPoly p) {
    DenAtom a;
    a.hash = p.hash();
    a.pivot = Sym::q;
    auto sup = p.support();
    bool chosen = false;
    auto lc_is_monomial = [&](Sym s) {
        int hi = p.degree_in(s);
        int count = 0;
        for (const auto& [m, c] : p.terms())
            if (m[s] == hi) ++count;
        return count == 1;
    };
    if (sup.test(idx(Sym::q)) && lc_is_monomial(Sym::q)) chosen = true;
    for (std::size_t i = 0; i < kSymbolCount && !chosen; ++i) {
        if (!sup.test(i)) continue;
        if (lc_is_monomial(static_cast<Sym>(i))) {
            a.pivot = static_cast<Sym>(i);
            chosen = true;
        }
    }
    if (!chosen) {
        for (std::size_t i = 0; i < kSymbolCount; ++i)
            if (sup.test(i)) {
                a.pivot = static_cast<Sym>(i);
                break;
            }
    }
    a.poly = std::make_shared<const MultiPoly>(std::move(p));
    return a;
}

void push_atom(std::vector<std::pair<DenAtom, int>>& atoms, DenAtom atom, int mult) {
    for (auto& [a, m] : atoms)
        if (a == atom) {
            m += mult;
            return;
        }
    atoms.emplace_back(std::move(atom), mult);
}

bool less_atom(const DenAtom& a, const DenAtom& b) {
    if (a.hash != b.hash) return a.hash < b.hash;
    const auto& ta = a.poly->terms();
    const auto& tb = b.poly->terms();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                        [](const MultiPoly::Term& x, const MultiPoly::Term& y) {
                                            if (x.first == y.first) return x.second < y.second;
                                            return x.first < y.first;
                                        });
}

// Splits a primitive polynomial in q alone into cyclotomic atoms plus a residual.
void split_cyclotomic(MultiPoly p, BigRational& scalar, std::vector<std::pair<DenAtom, int>>& atoms) {
    const int deg = p.degree_in(Sym::q);
    std::vector<int> candidates;
    if (p.size() == 2) {
        const int j = deg;
        const bool minus = p.terms()[0].second.sign() != p.terms()[1].second.sign();
        const int period = minus ? j : 2 * j;
        for (int d = 1; d <= period; ++d)
            if (period % d == 0 && (minus || j % d != 0)) candidates.push_back(d);
    } else if (deg <= 160) {
        for (int d = 1; d <= 4 * deg + 8; ++d)
            if (euler_phi(d) <= deg) candidates.push_back(d);
    }
    for (int d : candidates) {
        if (p.degree_in(Sym::q) == 0) break;
        if (euler_phi(d) > p.degree_in(Sym::q)) continue;
        std::vector<long long> co = cyclotomic_coeffs(d);
        std::vector<MultiPoly::Term> terms;
        for (std::size_t i = 0; i < co.size(); ++i)
            if (co[i]) terms.emplace_back(Monomial::var(Sym::q, static_cast<int>(i)), BigRational(static_cast<long>(co[i])));
        MultiPoly phi = MultiPoly::from_terms(std::move(terms));
        BigRational sign = phi.content();
        phi = phi.primitive();
        int mult = 0;
        MultiPoly quot;
        while (p.maybe_divisible_in(phi, Sym::q) && p.try_div_exact_in(phi, Sym::q, quot)) {
            p = std::move(quot);
            ++mult;
        }
        if (mult) push_atom(atoms, make_atom(phi), mult);
        (void)sign;
    }
    if (p.is_constant()) {
        scalar *= p.constant_value();
        return;
    }
    BigRational c = p.content();
    scalar *= c;
    push_atom(atoms, make_atom(p.primitive()), 1);
}

} // namespace

MultiPoly cyclotomic(int d) {
    std::vector<long long> co = cyclotomic_coeffs(d);
    std::vector<MultiPoly::Term> terms;
    for (std::size_t i = 0; i < co.size(); ++i)
        if (co[i]) terms.emplace_back(Monomial::var(Sym::q, static_cast<int>(i)), BigRational(static_cast<long>(co[i])));
    return MultiPoly::from_terms(std::move(terms));
}

AtomFactorization factor_atoms(const MultiPoly& p) {
    if (p.is_zero()) throw DivisionByZero("division by the zero polynomial");
    const auto& table = SymbolTable::standard();
    AtomFactorization out{BigRational(1), Monomial{}, {}};
    // Monomial content.
    Monomial g = p.terms()[0].first;
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < kSlots; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        const Sym s = static_cast<Sym>(i);
        if (table.invertible(s)) {
            out.monomial.e[i] = g.e[i];
        } else if (g.e[i] > 0) {
            push_atom(out.atoms, make_atom(MultiPoly::var(s)), g.e[i]);
        }
    }
    if (p.is_monomial()) {
        out.scalar = p.terms()[0].second;
        return out;
    }
    MultiPoly rest = p.mul_monomial(g.inverse());
    const BigRational c = rest.content();
    out.scalar = c;
    rest = rest.primitive();
    auto sup = rest.support();
    if (sup.count() == 1 && sup.test(idx(Sym::q))) {
        BigRational extra(1);
        split_cyclotomic(std::move(rest), extra, out.atoms);
        out.scalar *= extra;
    } else {
        push_atom(out.atoms, make_atom(std::move(rest)), 1);
    }
    return out;
}

namespace {

MultiPoly expand_factors(const std::vector<RatFunc::Factor>& fs) {
    MultiPoly r(1);
    for (const auto& f : fs)
        for (int k = 0; k < f.mult; ++k) r *= f.atom.get();
    return r;
}

std::vector<RatFunc::Factor> to_factors(std::vector<std::pair<DenAtom, int>> atoms) {
    std::vector<RatFunc::Factor> out;
    for (auto& [a, m] : atoms) out.push_back({std::move(a), m});
    std::sort(out.begin(), out.end(), [](const RatFunc::Factor& x, const RatFunc::Factor& y) {
        return less_atom(x.atom, y.atom);
    });
    return out;
}

// Multiset union with multiplicities added (add=true) or maximized.
std::vector<RatFunc::Factor> merge_factors(const std::vector<RatFunc::Factor>& a,
                                           const std::vector<RatFunc::Factor>& b, bool add) {
    std::vector<RatFunc::Factor> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less_atom(a[i].atom, b[j].atom))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less_atom(b[j].atom, a[i].atom)) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].atom, add ? a[i].mult + b[j].mult : std::max(a[i].mult, b[j].mult)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Product of atoms in `lcm` not covered by `part`.
MultiPoly cofactor(const std::vector<RatFunc::Factor>& lcm, const std::vector<RatFunc::Factor>& part) {
    MultiPoly r(1);
    std::size_t j = 0;
    for (const auto& f : lcm) {
        int have = 0;
        while (j < part.size() && less_atom(part[j].atom, f.atom)) ++j;
        if (j < part.size() && part[j].atom == f.atom) have = part[j].mult;
        for (int k = have; k < f.mult; ++k) r *= f.atom.get();
    }
    return r;
}

} // namespace

RatFunc RatFunc::fraction(const MultiPoly& num, const MultiPoly& den) {
    AtomFactorization f = factor_atoms(den);
    RatFunc r;
    r.num_ = num.mul_monomial(f.monomial.inverse(), f.scalar.inverse());
    r.den_ = to_factors(std::move(f.atoms));
    r.simplify();
    return r;
}

MultiPoly RatFunc::den() const { return expand_factors(den_); }

std::bitset<kSlots> RatFunc::support() const {
    auto s = num_.support();
    for (const auto& f : den_) s |= f.atom.get().support();
    return s;
}

void RatFunc::cancel_atom(std::size_t i) {
    auto& f = den_[i];
    MultiPoly quot;
    while (f.mult > 0 && num_.maybe_divisible_in(f.atom.get(), f.atom.pivot) &&
           num_.try_div_exact_in(f.atom.get(), f.atom.pivot, quot)) {
        num_ = std::move(quot);
        --f.mult;
    }
}

RatFunc& RatFunc::simplify() {
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (std::size_t i = 0; i < den_.size(); ++i) cancel_atom(i);
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.mult == 0; }), den_.end());
    return *this;
}

namespace {

bool same_den(const std::vector<RatFunc::Factor>& a, const std::vector<RatFunc::Factor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].mult != b[i].mult || !(a[i].atom == b[i].atom)) return false;
    return true;
}

} // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (same_den(a.den_, b.den_)) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.den_ = merge_factors(a.den_, b.den_, false);
        r.num_ = a.num_ * cofactor(r.den_, a.den_) + b.num_ * cofactor(r.den_, b.den_);
    }
    r.simplify();
    return r;
}

RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    if (b.den_.empty()) r.den_ = a.den_;
    else if (a.den_.empty()) r.den_ = b.den_;
    else r.den_ = merge_factors(a.den_, b.den_, true);
    if (!a.den_.empty() && !b.num_.is_constant()) r.simplify();
    else if (!b.den_.empty() && !a.num_.is_constant()) r.simplify();
    return r;
}

RatFunc RatFunc::sum(const std::vector<RatFunc>& terms) {
    std::vector<const RatFunc*> nz;
    for (const auto& t : terms)
        if (!t.is_zero()) nz.push_back(&t);
    if (nz.empty()) return {};
    if (nz.size() == 1) return *nz[0];
    std::vector<Factor> lcm = nz[0]->den_;
    for (std::size_t i = 1; i < nz.size(); ++i) lcm = merge_factors(lcm, nz[i]->den_, false);
    // Group numerators by identical denominators before applying cofactors.
    std::vector<std::pair<const std::vector<Factor>*, MultiPoly>> groups;
    for (const RatFunc* t : nz) {
        bool placed = false;
        for (auto& [den, acc] : groups)
            if (same_den(*den, t->den_)) {
                acc += t->num_;
                placed = true;
                break;
            }
        if (!placed) groups.emplace_back(&t->den_, t->num_);
    }
    RatFunc r;
    r.den_ = std::move(lcm);
    for (auto& [den, acc] : groups) {
        if (acc.is_zero()) continue;
        r.num_ += acc * cofactor(r.den_, *den);
    }
    r.simplify();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
    AtomFactorization f = factor_atoms(num_);
    RatFunc r;
    r.num_ = expand_factors(den_).mul_monomial(f.monomial.inverse(), f.scalar.inverse());
    r.den_ = to_factors(std::move(f.atoms));
    r.simplify();
    return r;
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    if (k == 0) return RatFunc(1);
    r.den_ = den_;
    for (auto& f : r.den_) f.mult *= k;
    return r;
}

bool equal(const RatFunc& a, const RatFunc& b) {
    if (same_den(a.den_, b.den_)) return a.num_ == b.num_;
    auto lcm = merge_factors(a.den_, b.den_, false);
    return a.num_ * cofactor(lcm, a.den_) == b.num_ * cofactor(lcm, b.den_);
}

BigRational RatFunc::eval(const Assignment& at) const {
    BigRational d(1);
    for (const auto& f : den_) {
        BigRational v = f.atom.get().eval(at);
        if (v.is_zero())
            throw DivisionByZero("denominator factor " + f.atom.get().to_string() + " vanishes at the point");
        d *= v.pow(f.mult);
    }
    return num_.eval(at) / d;
}

RatFunc RatFunc::partial_eval(const Assignment& at) const {
    if ((support() & at.mask()).none()) return *this;
    RatFunc r(num_.partial_eval(at));
    for (const auto& f : den_) {
        MultiPoly v = f.atom.get().partial_eval(at);
        if (v.is_zero())
            throw DivisionByZero("denominator factor " + f.atom.get().to_string() + " vanishes at the point");
        RatFunc inv = RatFunc::fraction(MultiPoly(1), v);
        r = r * inv.pow(f.mult);
    }
    return r;
}

namespace {

RatFunc poly_substitute(const MultiPoly& p, Sym s, const RatFunc& value) {
    if (!p.contains(s)) return RatFunc(p);
    if (value.is_polynomial() && (value.num().is_monomial() || p.min_degree_in(s) >= 0))
        return RatFunc(p.substitute(s, value.num()));
    auto parts = p.collect(s);
    std::vector<RatFunc> terms;
    for (const auto& [e, coef] : parts) terms.push_back(RatFunc(coef) * value.pow(e));
    return RatFunc::sum(terms);
}

} // namespace

RatFunc RatFunc::substitute(Sym s, const RatFunc& value) const {
    RatFunc r = poly_substitute(num_, s, value);
    for (const auto& f : den_) {
        if (!f.atom.get().contains(s)) {
            RatFunc part;
            part.num_ = MultiPoly(1);
            part.den_.push_back({f.atom, f.mult});
            r = r * part;
            continue;
        }
        RatFunc d = poly_substitute(f.atom.get(), s, value);
        if (d.is_zero())
            throw DivisionByZero("substitution makes denominator factor " + f.atom.get().to_string() + " vanish");
        r = r * d.inverse().pow(f.mult);
    }
    return r;
}

RatFunc RatFunc::scale_var(Sym s, const Monomial& m, const BigRational& c) const {
    MultiPoly val = MultiPoly::monomial(m * Monomial::var(s), c);
    return substitute(s, RatFunc(val));
}

std::string RatFunc::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string num = num_.to_string();
    if (num_.size() > 1) num = "(" + num + ")";
    std::string den;
    for (const auto& f : den_) {
        if (!den.empty()) den += "*";
        std::string a = f.atom.get().to_string();
        if (f.atom.get().size() > 1) a = "(" + a + ")";
        den += a;
        if (f.mult != 1) den += "^" + std::to_string(f.mult);
    }
    if (den_.size() > 1 || den_[0].mult != 1) den = "(" + den + ")";
    return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

} // namespace qident
