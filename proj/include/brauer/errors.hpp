#pragma once
#include <stdexcept>
#include <string>

namespace brauer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coeff
struct NonInvertibleSubstitution : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct MissingBinding : Error { using Error::Error; };

// diagram / term
struct NotAMatching : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct WidthViolation : Error {
    int level;
    WidthViolation(int lvl, const std::string& detail)
        : Error("width violation at level " + std::to_string(lvl) + ": " + detail), level(lvl) {}
};
struct SyntaxError : Error {
    size_t pos;
    SyntaxError(size_t p, const std::string& msg)
        : Error("syntax error at column " + std::to_string(p + 1) + ": " + msg), pos(p) {}
};

// params
struct EChoiceInvalid : Error { using Error::Error; };
struct ZeroForbidden : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };
struct InconsistentParams : Error { using Error::Error; };

// rewrite / functors / algebra
struct FuelExhausted : Error { using Error::Error; };
struct ParamsMismatch : Error { using Error::Error; };
struct NonUnitScale : Error { using Error::Error; };
struct WidthTooSmall : Error { using Error::Error; };

} // namespace brauer
