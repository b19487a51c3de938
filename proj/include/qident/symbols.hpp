#ifndef QIDENT_SYMBOLS_HPP
#define QIDENT_SYMBOLS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qident {

/// Fixed symbol slots. The order here is the registry order used for
/// exponent vectors and for printing.
enum class Sym : std::uint8_t {
    q, A, B, a, c, z, lam, x, y, b, u, v, t, s, w,
};

inline constexpr std::size_t kSymbolCount = 15;
inline constexpr std::size_t kSlots = 16;

inline constexpr std::size_t idx(Sym s) noexcept { return static_cast<std::size_t>(s); }

struct SymbolInfo {
    std::string_view name;
    bool invertible;
    /// Parameters are printed inside coefficient groups, variables outside.
    bool parameter;
    /// Expansion variables of truncated series.
    bool expansion;
};

/// Read-only registry of the symbols known to the kernel.
class SymbolTable {
public:
    static const SymbolTable& standard();

    const SymbolInfo& info(Sym s) const { return infos_[idx(s)]; }
    std::string_view name(Sym s) const { return infos_[idx(s)].name; }
    bool invertible(Sym s) const { return infos_[idx(s)].invertible; }
    std::optional<Sym> find(std::string_view name) const;
    /// Throws SymbolError on unknown names.
    Sym lookup(std::string_view name) const;

private:
    SymbolTable();
    std::array<SymbolInfo, kSymbolCount> infos_;
};

inline std::string_view sym_name(Sym s) { return SymbolTable::standard().name(s); }

} // namespace qident

#endif // QIDENT_SYMBOLS_HPP
