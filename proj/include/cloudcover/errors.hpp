#pragma once

#include <stdexcept>
#include <string>

namespace cloudcover {

enum class ErrorKind {
    DimensionMismatch,
    CoincidentPoints,
    NotInvertible,
    DependentInput,
    CollinearInput,
    DuplicateInput,
    BadDimensions,
    CenterInCloud,
    CenterMismatch,
    NotACloud,
    CertificationFailed,
    OutOfWindow,
    AtInfinity,
    BudgetExceeded,
    UnsupportedDim,
    UnsupportedCloud,
    SyntaxError,
    UnknownName,
    BadRational,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cloudcover
