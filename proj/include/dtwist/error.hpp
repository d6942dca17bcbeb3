#pragma once

#include <stdexcept>
#include <string>

namespace dt {

enum class ErrorKind {
    ParseError,
    DanglingReference,
    UnknownDefinition,
    RecursiveDefinition,
    UnknownCurve,
    UnmappedCurve,
    IllegalLicense,
    PositionOutOfRange,
    ResultMismatch,
    BudgetExhausted,
    MissingTableEntry,
    NonIntegerSignature,
    InsufficientSections,
    EmptySum,
    Overflow,
};

const char *to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &what);

} // namespace dt
