#include "qident/symbols.hpp"

#include "qident/errors.hpp"

namespace qident {

SymbolTable::SymbolTable()
    : infos_{{
          {"q", true, true, false},
          {"A", true, true, false},
          {"B", true, true, false},
          {"a", true, true, false},
          {"c", true, true, false},
          {"z", true, true, false},
          {"lambda", true, true, true},
          {"x", false, false, false},
          {"y", false, false, false},
          {"b", false, false, false},
          {"u", false, false, false},
          {"v", false, false, false},
          {"t", false, false, true},
          {"s", false, false, true},
          {"w", false, false, true},
      }} {}

const SymbolTable& SymbolTable::standard() {
    static const SymbolTable table;
    return table;
}

std::optional<Sym> SymbolTable::find(std::string_view name) const {
    if (name == "lam" || name == "λ") return Sym::lam;
    if (name == "omega" || name == "ω") return Sym::w;
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (infos_[i].name == name) return static_cast<Sym>(i);
    return std::nullopt;
}

Sym SymbolTable::lookup(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw SymbolError("unknown symbol '" + std::string(name) + "'");
}

} // namespace qident
