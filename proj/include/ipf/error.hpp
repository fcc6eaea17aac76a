#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipf {

enum class ErrorKind {
    MalformedInput,
    ToleranceBelowPreference,
    Inconsistent,
    OutOfDomain,
    ScaleExceeded,
    NonIntegerResult,
    InvalidWord,
    NotNondecreasing,
    NotParkingFunction,
    NotFubini,
    NotUnitInterval,
    MalformedArrangement,
    ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ToleranceBelowPreference: return "ToleranceBelowPreference";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::NotNondecreasing: return "NotNondecreasing";
    case ErrorKind::NotParkingFunction: return "NotParkingFunction";
    case ErrorKind::NotFubini: return "NotFubini";
    case ErrorKind::NotUnitInterval: return "NotUnitInterval";
    case ErrorKind::MalformedArrangement: return "MalformedArrangement";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ipf
