#pragma once

#include <stdexcept>
#include <string>

namespace holey {

enum class ErrorKind {
    EmptyInput,
    DuplicateCell,
    Disconnected,
    ParseError,
    ContractViolation,
    ConsistencyFailure,
    ExtensionCapacityExceeded,
    BelowDomain,
    CapExceeded,
    InsufficientCensus,
    SearchBudgetExceeded,
    PreconditionViolation,
    InternalInvariant,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Process exit codes used by the CLI: 2 bad input, 3 broken construction
// contract, 4 out-of-domain request, 5 internal invariant breach.
inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput:
        case ErrorKind::DuplicateCell:
        case ErrorKind::Disconnected:
        case ErrorKind::ParseError:
            return 2;
        case ErrorKind::ContractViolation:
        case ErrorKind::ConsistencyFailure:
            return 3;
        case ErrorKind::ExtensionCapacityExceeded:
        case ErrorKind::BelowDomain:
        case ErrorKind::CapExceeded:
        case ErrorKind::InsufficientCensus:
        case ErrorKind::SearchBudgetExceeded:
        case ErrorKind::PreconditionViolation:
            return 4;
        case ErrorKind::InternalInvariant:
            return 5;
    }
    return 5;
}

}  // namespace holey
