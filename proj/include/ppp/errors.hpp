#ifndef PPP_ERRORS_HPP
#define PPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppp {

enum class Errc {
    PathsCross,
    EndpointMismatch,
    NotInFirstColumn,
    NotAdmissible,
    SpiralRow,
    DegeneratedInput,
    InvalidRotation,
    TrunkShapeMismatch,
    InvalidMark,
    ParseError,
    InvariantViolation,
    NonInvertible,
    BadValuation,
    NonIntegralCoefficient,
    SaturationNotReached,
    Overflow,
};

const char* errc_name(Errc c);

/// Library error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace ppp

#endif
