#include "cloudcover/errors.hpp"

namespace cloudcover {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DependentInput: return "DependentInput";
        case ErrorKind::CollinearInput: return "CollinearInput";
        case ErrorKind::DuplicateInput: return "DuplicateInput";
        case ErrorKind::BadDimensions: return "BadDimensions";
        case ErrorKind::CenterInCloud: return "CenterInCloud";
        case ErrorKind::CenterMismatch: return "CenterMismatch";
        case ErrorKind::NotACloud: return "NotACloud";
        case ErrorKind::CertificationFailed: return "CertificationFailed";
        case ErrorKind::OutOfWindow: return "OutOfWindow";
        case ErrorKind::AtInfinity: return "AtInfinity";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::UnsupportedDim: return "UnsupportedDim";
        case ErrorKind::UnsupportedCloud: return "UnsupportedCloud";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::BadRational: return "BadRational";
    }
    return "UnknownError";
}

}  // namespace cloudcover
