#include "qident/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "qident/errors.hpp"

namespace qident {

bool Monomial::violates_invertibility() const {
    const auto& table = SymbolTable::standard();
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (e[i] < 0 && !table.invertible(static_cast<Sym>(i))) return true;
    return false;
}

const BigRational& Assignment::at(Sym s) const {
    if (!bound(s)) throw SymbolError("symbol '" + std::string(sym_name(s)) + "' is not bound");
    return val_[idx(s)];
}

MultiPoly::MultiPoly(const BigRational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::var(Sym s, int power) { return monomial(Monomial::var(s, power)); }

MultiPoly MultiPoly::monomial(const Monomial& m, BigRational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    MultiPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        BigRational c = std::move(terms_[i].second);
        while (j < terms_.size() && terms_[j].first == terms_[i].first) c += terms_[j++].second;
        if (!c.is_zero()) {
            terms_[out].first = terms_[i].first;
            terms_[out].second = std::move(c);
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

BigRational MultiPoly::constant_term() const {
    for (const auto& [m, c] : terms_)
        if (m.is_one()) return c;
    return BigRational(0);
}

BigRational MultiPoly::constant_value() const {
    if (!is_constant()) throw NotInDomain("polynomial is not constant: " + to_string());
    return constant_term();
}

int MultiPoly::degree_in(Sym s) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[s] > d) d = m[s];
        first = false;
    }
    return d;
}

int MultiPoly::min_degree_in(Sym s) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[s] < d) d = m[s];
        first = false;
    }
    return d;
}

bool MultiPoly::contains(Sym s) const {
    for (const auto& [m, c] : terms_)
        if (m[s] != 0) return true;
    return false;
}

std::bitset<kSlots> MultiPoly::support() const {
    std::bitset<kSlots> out;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < kSlots; ++i)
            if (m.e[i]) out.set(i);
    return out;
}

std::vector<Sym> MultiPoly::free_symbols() const {
    auto sup = support();
    std::vector<Sym> out;
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (sup.test(i)) out.push_back(static_cast<Sym>(i));
    return out;
}

namespace {

template <class Op>
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b, Op op) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, op(BigRational(0), b[j].second));
            ++j;
        } else {
            BigRational c = op(a[i].second, b[j].second);
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, [](const BigRational& x, const BigRational& y) { return x + y; });
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, [](const BigRational& x, const BigRational& y) { return x - y; });
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
    std::vector<MultiPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
    return MultiPoly::from_terms(std::move(prod));
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const BigRational& c) const {
    if (c.is_zero()) return {};
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        t.first *= m;
        if (!c.is_one()) t.second *= c;
    }
    // Multiplying every exponent vector by the same monomial preserves the order.
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result(1), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::scale_var(Sym s, const Monomial& factor, const BigRational& c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, coef] : terms_) {
        const int e = m[s];
        out.emplace_back(m * factor.pow(e), e == 0 ? coef : coef * c.pow(e));
    }
    return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(Sym s, const MultiPoly& value) const {
    if (value.is_monomial()) return scale_var(s, value.terms_[0].first * Monomial::var(s, -1), value.terms_[0].second);
    if (min_degree_in(s) < 0) throw NotInDomain("negative power substituted by a non-monomial");
    std::map<int, MultiPoly> parts = collect(s);
    MultiPoly out;
    std::map<int, MultiPoly> powers;
    for (const auto& [e, coef] : parts) {
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
        out += coef * it->second;
    }
    return out;
}

MultiPoly MultiPoly::partial_eval(const Assignment& at) const {
    const auto mask = at.mask();
    if ((support() & mask).none()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, coef] : terms_) {
        Monomial rest = m;
        BigRational c = coef;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (m.e[i] && mask.test(i)) {
                c *= at.at(static_cast<Sym>(i)).pow(m.e[i]);
                rest.e[i] = 0;
            }
        }
        out.emplace_back(rest, std::move(c));
    }
    return from_terms(std::move(out));
}

BigRational MultiPoly::eval(const Assignment& at) const {
    std::array<std::map<int, BigRational>, kSlots> cache;
    BigRational sum(0);
    for (const auto& [m, coef] : terms_) {
        BigRational c = coef;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (!m.e[i]) continue;
            auto& slot = cache[i];
            auto it = slot.find(m.e[i]);
            if (it == slot.end()) it = slot.emplace(m.e[i], at.at(static_cast<Sym>(i)).pow(m.e[i])).first;
            c *= it->second;
        }
        sum += c;
    }
    return sum;
}

std::map<int, MultiPoly> MultiPoly::collect(Sym s) const {
    std::map<int, std::vector<Term>> parts;
    for (const auto& [m, coef] : terms_) {
        Monomial rest = m;
        rest.e[idx(s)] = 0;
        parts[m[s]].emplace_back(rest, coef);
    }
    std::map<int, MultiPoly> out;
    for (auto& [e, ts] : parts) out.emplace(e, from_terms(std::move(ts)));
    return out;
}

bool MultiPoly::try_div_exact_in(const MultiPoly& d, Sym pivot, MultiPoly& quotient) const {
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) {
        quotient = MultiPoly();
        return true;
    }
    auto dm = d.collect(pivot);
    const int hi_d = dm.rbegin()->first;
    const int lo_d = dm.begin()->first;
    const MultiPoly& lc = dm.rbegin()->second;
    if (!lc.is_monomial()) return false;
    const Monomial lc_inv = lc.terms_[0].first.inverse();
    const BigRational lc_c_inv = lc.terms_[0].second.inverse();

    auto r = collect(pivot);
    const int lo_bound = r.begin()->first - lo_d;
    const bool pivot_laurent = SymbolTable::standard().invertible(pivot);
    std::vector<Term> qterms;
    while (!r.empty()) {
        auto top = std::prev(r.end());
        const int k = top->first - hi_d;
        if (k < lo_bound || (!pivot_laurent && k < 0)) return false;
        MultiPoly c = top->second.mul_monomial(lc_inv, lc_c_inv);
        for (const auto& [m, coef] : c.terms_)
            if (m.violates_invertibility()) return false;
        for (const auto& [j, dj] : dm) {
            auto& slot = r[k + j];
            slot -= c * dj;
            if (slot.is_zero()) r.erase(k + j);
        }
        for (const auto& [m, coef] : c.terms_) {
            Monomial mm = m;
            mm.e[idx(pivot)] = static_cast<std::int16_t>(k);
            qterms.emplace_back(mm, coef);
        }
    }
    quotient = from_terms(std::move(qterms));
    return true;
}

MultiPoly MultiPoly::div_exact_in(const MultiPoly& d, Sym pivot) const {
    MultiPoly quot;
    if (!try_div_exact_in(d, pivot, quot))
        throw NotDivisible("(" + to_string() + ") is not divisible by (" + d.to_string() + ") in " +
                           std::string(sym_name(pivot)));
    return quot;
}

BigRational MultiPoly::content() const {
    if (is_zero()) return BigRational(1);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    g = abs(g);
    BigRational r(g, l);
    if (terms_[0].second.sign() < 0) r = -r;
    return r;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return {};
    BigRational inv = content().inverse();
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.second *= inv;
    return p;
}

std::size_t MultiPoly::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [m, c] : terms_) {
        for (auto x : m.e) h = (h ^ static_cast<std::size_t>(static_cast<std::uint16_t>(x))) * 1099511628211ULL;
        h = (h ^ c.hash()) * 1099511628211ULL;
    }
    return h;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kSlots; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

namespace {

std::string monomial_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += sym_name(static_cast<Sym>(i));
        if (m.e[i] != 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

std::string rational_factor(const BigRational& r) {
    if (r.denominator() == 1) return r.to_string();
    return "(" + r.to_string() + ")";
}

// Term with |coefficient| and monomial, no sign.
std::string unsigned_term(const BigRational& absc, const Monomial& m) {
    const std::string mono = monomial_string(m);
    if (mono.empty()) return rational_factor(absc);
    if (absc.is_one()) return mono;
    return rational_factor(absc) + "*" + mono;
}

bool ascending_coeff(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kSlots; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

std::string join_terms(const std::vector<MultiPoly::Term>& ts, bool spaced) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const bool neg = ts[i].second.sign() < 0;
        const std::string body = unsigned_term(ts[i].second.abs(), ts[i].first);
        if (i == 0) out += (neg ? "-" : "") + body;
        else if (spaced) out += (neg ? " - " : " + ") + body;
        else out += (neg ? "-" : "+") + body;
    }
    return out;
}

} // namespace

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    const auto& table = SymbolTable::standard();
    struct Group {
        Monomial vars;
        std::vector<Term> coeff;
    };
    std::vector<Group> groups;
    for (const auto& [m, c] : terms_) {
        Monomial vars, params;
        for (std::size_t i = 0; i < kSymbolCount; ++i)
            (table.info(static_cast<Sym>(i)).parameter ? params : vars).e[i] = m.e[i];
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.vars == vars; });
        if (it == groups.end()) groups.push_back({vars, {}}), it = std::prev(groups.end());
        it->coeff.emplace_back(params, c);
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return grlex_greater(a.vars, b.vars); });
    for (auto& g : groups)
        std::sort(g.coeff.begin(), g.coeff.end(),
                  [](const Term& a, const Term& b) { return ascending_coeff(a.first, b.first); });

    if (groups.size() == 1 && groups[0].vars.is_one()) return join_terms(groups[0].coeff, true);

    std::string out;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        auto coeff = groups[gi].coeff;
        const std::string vars = monomial_string(groups[gi].vars);
        bool neg = coeff[0].second.sign() < 0;
        if (neg)
            for (auto& t : coeff) t.second = -t.second;
        std::string body;
        if (coeff.size() == 1) {
            Monomial m = coeff[0].first * groups[gi].vars;
            body = unsigned_term(coeff[0].second, m);
        } else {
            body = "(" + join_terms(coeff, false) + ")";
            if (!vars.empty()) body += "*" + vars;
        }
        if (gi == 0) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

} // namespace qident

namespace qident {

namespace {

constexpr std::uint64_t kModP = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(r & kModP);
    std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
    std::uint64_t s = lo + hi;
    return s >= kModP ? s - kModP : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kModP ? s - kModP : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kModP - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kModP - 2); }

// Fixed pseudo-random evaluation values, one per slot.
std::uint64_t slot_value(std::size_t i) {
    std::uint64_t z = 0x9E3779B97F4A7C15ULL * (i + 7);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return 2 + z % (kModP - 3);
}

bool rational_mod(const BigRational& c, std::uint64_t& out) {
    const std::uint64_t n = mpz_fdiv_ui(c.raw().get_num_mpz_t(), kModP);
    const std::uint64_t d = mpz_fdiv_ui(c.raw().get_den_mpz_t(), kModP);
    if (d == 0) return false;
    out = mulmod(n, invmod(d));
    return true;
}

// Univariate image in pivot, shifted so the lowest exponent is 0.
bool univariate_image(const MultiPoly& p, Sym pivot, std::vector<std::uint64_t>& out) {
    const int lo = p.min_degree_in(pivot), hi = p.degree_in(pivot);
    out.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    std::array<std::map<int, std::uint64_t>, kSlots> cache;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t v;
        if (!rational_mod(c, v)) return false;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (i == idx(pivot) || !m.e[i]) continue;
            auto& slot = cache[i];
            auto it = slot.find(m.e[i]);
            if (it == slot.end()) {
                std::uint64_t base = slot_value(i);
                if (m.e[i] < 0) base = invmod(base);
                it = slot.emplace(m.e[i], powmod(base, static_cast<std::uint64_t>(std::abs(m.e[i])))).first;
            }
            v = mulmod(v, it->second);
        }
        auto& cell = out[static_cast<std::size_t>(m[pivot] - lo)];
        cell = addmod(cell, v);
    }
    return true;
}

} // namespace

bool MultiPoly::maybe_divisible_in(const MultiPoly& d, Sym pivot) const {
    if (is_zero()) return true;
    std::vector<std::uint64_t> num, den;
    if (!univariate_image(*this, pivot, num) || !univariate_image(d, pivot, den)) return true;
    while (!den.empty() && den.back() == 0) den.pop_back();
    if (den.empty()) return true;
    if (den.size() == 1) return true;
    if (den.size() > num.size()) {
        for (auto x : num) if (x) return false;
        return true;
    }
    const std::uint64_t lc_inv = invmod(den.back());
    const std::size_t dd = den.size() - 1;
    for (std::size_t k = num.size(); k-- > dd;) {
        const std::uint64_t f = mulmod(num[k], lc_inv);
        if (!f) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] = submod(num[k - dd + j], mulmod(f, den[j]));
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (num[k]) return false;
    return true;
}

} // namespace qident
