#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levysobolev {

enum class ErrorCode {
    InvalidParams,
    InvalidArgument,
    EvalOverflow,
    NotOneDimensional,
    QuadratureFailure,
    DivergentIntegral,
    FitUnstable,
    Inconsistent,
    DegenerateSymbol,
    NonpositiveRealPart,
    UnknownFamily,
    TailUnbounded,
    MissingField,
    GridMismatch,
    UnstableScheme,
    TailTooFat,
    ConfigError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::EvalOverflow: return "EvalOverflow";
        case ErrorCode::NotOneDimensional: return "NotOneDimensional";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::DivergentIntegral: return "DivergentIntegral";
        case ErrorCode::FitUnstable: return "FitUnstable";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::DegenerateSymbol: return "DegenerateSymbol";
        case ErrorCode::NonpositiveRealPart: return "NonpositiveRealPart";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::TailUnbounded: return "TailUnbounded";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::UnstableScheme: return "UnstableScheme";
        case ErrorCode::TailTooFat: return "TailTooFat";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Exception carrying a machine-readable code; `what()` is "<Code>: <message>".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) throw Error(code, message);
}

}  // namespace levysobolev
