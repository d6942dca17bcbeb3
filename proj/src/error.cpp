#include "dtwist/error.hpp"

namespace dt {

const char *to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UnknownDefinition: return "UnknownDefinition";
    case ErrorKind::RecursiveDefinition: return "RecursiveDefinition";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::UnmappedCurve: return "UnmappedCurve";
    case ErrorKind::IllegalLicense: return "IllegalLicense";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::ResultMismatch: return "ResultMismatch";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::MissingTableEntry: return "MissingTableEntry";
    case ErrorKind::NonIntegerSignature: return "NonIntegerSignature";
    case ErrorKind::InsufficientSections: return "InsufficientSections";
    case ErrorKind::EmptySum: return "EmptySum";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "?";
}

void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace dt
