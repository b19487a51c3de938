#ifndef QIDENT_ERRORS_HPP
#define QIDENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qident {

/// Root of every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Stable machine-readable tag ("DivisionByZero", ...), used in reports.
    virtual const char* kind() const noexcept { return "Error"; }
};

#define QIDENT_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
        const char* kind() const noexcept override { return #Name; }           \
    };

QIDENT_DEFINE_ERROR(DivisionByZero)
QIDENT_DEFINE_ERROR(NotDivisible)
QIDENT_DEFINE_ERROR(NotInDomain)
QIDENT_DEFINE_ERROR(OrderExceeded)
QIDENT_DEFINE_ERROR(NonUnitConstantTerm)
QIDENT_DEFINE_ERROR(MissingExpansionVar)
QIDENT_DEFINE_ERROR(NotFormallySummable)
QIDENT_DEFINE_ERROR(TailNotBounded)
QIDENT_DEFINE_ERROR(DomainViolation)
QIDENT_DEFINE_ERROR(KMaxTooSmall)
QIDENT_DEFINE_ERROR(SymbolError)
QIDENT_DEFINE_ERROR(ParseError)
QIDENT_DEFINE_ERROR(ConfigError)

#undef QIDENT_DEFINE_ERROR

} // namespace qident

#endif // QIDENT_ERRORS_HPP
