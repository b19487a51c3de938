#include "qident/families.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qident {

namespace {
MultiPoly V(Sym s) { return MultiPoly::var(s); }
const MultiPoly& Q() {
    static const MultiPoly q = MultiPoly::var(Sym::q);
    return q;
}
} // namespace

MultiPoly cauchy_p(int n, Sym x, Sym y) { return cauchy_p<MultiPoly>(n, V(x), V(y), Q()); }
MultiPoly cigler_C3(int n, Sym x, Sym y, Sym b, Sym A) { return cigler_C3<MultiPoly>(n, V(A), V(x), V(y), V(b), Q()); }
MultiPoly cigler_D3(int n, Sym x, Sym y, Sym b, Sym A) { return cigler_D3<MultiPoly>(n, V(A), V(x), V(y), V(b), Q()); }
MultiPoly caoniu_C(int n, Sym x, Sym b, Sym A) { return caoniu_C<MultiPoly>(n, V(A), V(x), V(b), Q()); }
MultiPoly caoniu_D(int n, Sym x, Sym b, Sym A) { return caoniu_D<MultiPoly>(n, V(A), V(x), V(b), Q()); }
MultiPoly cigler_l(int n, Sym x, Sym A) { return cigler_l<MultiPoly>(n, V(A), V(x), Q()); }
RatFunc qlaguerre_L(int n, Sym x, Sym A) {
    return qlaguerre_L<RatFunc>(n, RatFunc::var(A), RatFunc::var(x), RatFunc::var(Sym::q));
}
MultiPoly hahn_phi(int n, Sym a, Sym x) { return hahn_phi<MultiPoly>(n, V(a), V(x), Q()); }
MultiPoly hahn_psi(int n, Sym a, Sym x) { return hahn_psi<MultiPoly>(n, V(a), V(x), Q()); }

const MultiPoly& family_poly(Family f, int n) {
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, MultiPoly> cache;
    const std::pair<int, int> key{static_cast<int>(f), n};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    MultiPoly p;
    switch (f) {
    case Family::cauchy_p: p = cauchy_p(n); break;
    case Family::cauchy_p_yx: p = cauchy_p(n, Sym::y, Sym::x); break;
    case Family::cigler_C3: p = cigler_C3(n); break;
    case Family::cigler_D3: p = cigler_D3(n); break;
    case Family::caoniu_C: p = caoniu_C(n); break;
    case Family::caoniu_D: p = caoniu_D(n); break;
    case Family::cigler_l: p = cigler_l(n); break;
    case Family::hahn_phi: p = hahn_phi(n); break;
    case Family::hahn_psi: p = hahn_psi(n); break;
    }
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(p)).first->second;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"cauchy_p", "qlaguerre_L", "cigler_l", "caoniu_C", "caoniu_D",
                                                "cigler_C3", "cigler_D3", "hahn_phi", "hahn_psi"};
    return names;
}

RatFunc expand_family(const std::string& tag, int n) {
    if (n < 0) throw ConfigError("degree must be non-negative");
    if (tag == "cauchy_p") return cauchy_p(n);
    if (tag == "qlaguerre_L") return qlaguerre_L(n);
    if (tag == "cigler_l") return cigler_l(n);
    if (tag == "caoniu_C") return caoniu_C(n);
    if (tag == "caoniu_D") return caoniu_D(n);
    if (tag == "cigler_C3") return cigler_C3(n);
    if (tag == "cigler_D3") return cigler_D3(n);
    if (tag == "hahn_phi") return hahn_phi(n);
    if (tag == "hahn_psi") return hahn_psi(n);
    throw SymbolError("unknown family '" + tag + "'");
}

} // namespace qident
