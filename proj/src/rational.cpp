#include "qident/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

#include "qident/errors.hpp"

namespace qident {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw DivisionByZero("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("invalid integer literal '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

} // namespace

BigRational BigRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class n = parse_integer(std::string_view(s).substr(0, slash));
        mpz_class d = parse_integer(std::string_view(s).substr(slash + 1));
        if (d == 0) throw DivisionByZero("rational literal with zero denominator");
        return BigRational(n, d);
    }

    // Decimal / scientific.
    long exp10 = 0;
    std::string mant = s;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mant = s.substr(0, e);
        exp10 = parse_integer(std::string_view(s).substr(e + 1)).get_si();
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        mant.erase(0, 1);
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) throw ParseError("two decimal points in '" + s + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac;
        } else {
            throw ParseError("invalid numeric literal '" + s + "'");
        }
    }
    if (digits.empty()) throw ParseError("invalid numeric literal '" + s + "'");
    mpz_class n(digits, 10);
    if (neg) n = -n;
    exp10 -= frac;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? BigRational(mpz_class(n * p), mpz_class(1)) : BigRational(n, p);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return BigRational(std::move(r));
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r;
    mpz_swap(mpq_numref(r.get_mpq_t()), n.get_mpz_t());
    mpz_swap(mpq_denref(r.get_mpq_t()), d.get_mpz_t());
    BigRational out;
    out.v_ = std::move(r); // powers of a reduced fraction stay reduced
    return out;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string BigRational::to_string() const { return v_.get_str(10); }

std::string BigRational::to_decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = mpz_class(::abs(v_.get_num()) * scale) / v_.get_den();
    std::string s = scaled.get_str(10);
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    std::string out = (sign() < 0 ? "-" : "") + s.substr(0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
    return out;
}

std::string BigRational::to_sci(int digits) const {
    if (is_zero()) return "0";
    mpf_class f(v_, 256);
    mp_exp_t e;
    std::string m = f.get_str(e, 10, static_cast<std::size_t>(digits));
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out = neg ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

long BigRational::log2_floor() const {
    if (is_zero()) throw DivisionByZero("log2 of zero");
    mpz_class n = ::abs(v_.get_num());
    const mpz_class& d = v_.get_den();
    long est = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // 2^est is within a factor 2 of |x|; correct by comparison.
    auto ge_pow2 = [&](long k) {
        // |x| >= 2^k  <=>  n >= d * 2^k
        if (k >= 0) return n >= (mpz_class(d) << static_cast<unsigned long>(k));
        return mpz_class(n << static_cast<unsigned long>(-k)) >= d;
    };
    while (!ge_pow2(est)) --est;
    while (ge_pow2(est + 1)) ++est;
    return est;
}

BigRational BigRational::round_up_dyadic(unsigned bits) const {
    if (is_zero()) return BigRational(0);
    const long k = static_cast<long>(bits) - log2_floor();
    mpz_class n = ::abs(v_.get_num());
    mpz_class d = v_.get_den();
    mpz_class num, den(1);
    if (k >= 0) n <<= static_cast<unsigned long>(k);
    else d <<= static_cast<unsigned long>(-k);
    mpz_cdiv_q(num.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (k >= 0) den <<= static_cast<unsigned long>(k);
    else num <<= static_cast<unsigned long>(-k);
    return BigRational(num, den);
}

std::size_t BigRational::hash() const {
    std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(v_.get_den().get_str(16)) * 1099511628211ULL);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational pow10_neg(int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return BigRational(mpz_class(1), p);
}

} // namespace qident
