#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eulerlab {

enum class ErrorKind {
    InvalidLift,
    NonInvertible,
    InvalidGroup,
    InvalidSpace,
    InconsistentCocycle,
    NotAHomomorphism,
    NotACocycle,
    NotEquivariant,
    NotAPrimitive,
    NotALift,
    VerificationFailed,
    MixedAtomicity,
    UnsupportedDegree,
    DimensionMismatch,
    MalformedInput,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidLift: return "InvalidLift";
        case ErrorKind::NonInvertible: return "NonInvertible";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::InvalidSpace: return "InvalidSpace";
        case ErrorKind::InconsistentCocycle: return "InconsistentCocycle";
        case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorKind::NotACocycle: return "NotACocycle";
        case ErrorKind::NotEquivariant: return "NotEquivariant";
        case ErrorKind::NotAPrimitive: return "NotAPrimitive";
        case ErrorKind::NotALift: return "NotALift";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::MixedAtomicity: return "MixedAtomicity";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

class EulerError : public std::runtime_error {
public:
    EulerError(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw EulerError(kind, message);
}

/// Diagnostic result of a verifier. Violations make the object invalid,
/// warnings do not (e.g. a non-free action).
struct Report {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool valid() const { return violations.empty(); }

    std::string summary() const {
        if (valid() && warnings.empty()) return "valid";
        std::string s = valid() ? "valid" : "invalid";
        for (const auto& v : violations) s += "; violation: " + v;
        for (const auto& w : warnings) s += "; warning: " + w;
        return s;
    }
};

}  // namespace eulerlab
