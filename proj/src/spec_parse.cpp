#include "qident/spec_parse.hpp"

#include <cctype>

namespace qident {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc sum() {
        RatFunc r = product();
        for (;;) {
            if (eat('+')) r += product();
            else if (eat('-')) r -= product();
            else return r;
        }
    }
    RatFunc product() {
        RatFunc r = unary();
        for (;;) {
            if (eat('*')) {
                r *= unary();
            } else if (eat('/')) {
                const RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }
    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RatFunc power() {
        RatFunc base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (neg && base.is_zero()) fail("negative power of zero");
        return base.pow(neg ? -e : e);
    }
    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = sum();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return RatFunc(BigRational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                        static_cast<unsigned char>(s_[pos_]) >= 0x80))
                ++pos_;
            return RatFunc::var(SymbolTable::standard().lookup(s_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<RatFunc> parse_list(std::string_view s) {
    s = trim(s);
    std::vector<RatFunc> out;
    if (s.empty() || s == "-") return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(parse_expression(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

RatFunc parse_expression(std::string_view text) { return ExprParser(text).parse(); }

PhiText parse_phi(std::string_view text) {
    text = trim(text);
    const std::size_t open = text.find('['), close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("expected '[upper; lower; argument]' in '" + std::string(text) + "'");
    const std::string_view prefix = trim(text.substr(0, open));
    const std::string_view body = text.substr(open + 1, close - open - 1);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i)
        if (i == body.size() || body[i] == ';') {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    if (parts.size() != 3) throw ParseError("expected three ';'-separated parts in '" + std::string(text) + "'");
    PhiText out{parse_list(parts[0]), parse_list(parts[1]), parse_expression(trim(parts[2]))};
    if (!prefix.empty()) {
        const std::size_t p = prefix.find("phi");
        if (p == std::string_view::npos) throw ParseError("unknown prefix '" + std::string(prefix) + "'");
        const std::string r(prefix.substr(0, p)), s(prefix.substr(p + 3));
        if ((!r.empty() && std::stoul(r) != out.upper.size()) || (!s.empty() && std::stoul(s) != out.lower.size()))
            throw ParseError("parameter counts do not match '" + std::string(prefix) + "'");
    }
    return out;
}

PhiSpec<BigRational> bind_phi(const PhiText& phi, const Assignment& values) {
    if (!values.bound(Sym::q)) throw ConfigError("q must be bound");
    const BigRational q = values.at(Sym::q);
    auto value = [&](const RatFunc& r) {
        std::vector<Sym> syms = r.num().free_symbols();
        for (Sym s : r.den().free_symbols()) syms.push_back(s);
        for (Sym s : syms)
            if (!values.bound(s)) throw ConfigError("symbol '" + std::string(sym_name(s)) + "' is not bound");
        return r.eval(values);
    };
    PhiSpec<BigRational> spec;
    auto param = [](const BigRational& v) {
        return v.is_zero() ? PhiParam<BigRational>::null() : PhiParam<BigRational>::scalar(v);
    };
    for (const auto& u : phi.upper) {
        const BigRational v = value(u);
        spec.upper.push_back(param(v));
        if (v.is_zero() || q.is_zero() || q.abs() >= BigRational(1)) continue;
        // v = q^-m for some m >= 0?
        BigRational p(1);
        for (int m = 0; p.abs() <= v.abs(); ++m, p /= q)
            if (p == v && (!spec.terminates_after || m < *spec.terminates_after)) spec.terminates_after = m;
    }
    for (const auto& l : phi.lower) spec.lower.push_back(param(value(l)));
    spec.argument = param(value(phi.argument));
    return spec;
}

Assignment parse_bindings(const std::vector<std::string>& items) {
    Assignment out;
    for (const auto& item : items) {
        std::string_view rest = item;
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view one = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (one.empty()) continue;
            const std::size_t eq = one.find('=');
            if (eq == std::string_view::npos) throw ParseError("binding '" + std::string(one) + "' lacks '='");
            const Sym s = SymbolTable::standard().lookup(trim(one.substr(0, eq)));
            const RatFunc v = parse_expression(one.substr(eq + 1));
            if (!v.is_constant()) throw ParseError("binding for '" + std::string(sym_name(s)) + "' is not a number");
            out.set(s, v.num().constant_value());
        }
    }
    return out;
}

} // namespace qident
