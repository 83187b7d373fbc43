#pragma once

#include <stdexcept>
#include <string>

namespace segkit {

// A caller broke a documented precondition (bad k, bad boundary pair, ...).
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Input data could not be read or parsed (missing file, bad cell, empty series).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A bad combination of command-line options, detected before any work runs.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is not available on this object,
// e.g. reconstructing boundaries from a table built without backpointers.
class UnsupportedOperation : public std::logic_error {
public:
    explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive enumeration would exceed its hard budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A solver was asked for something that does not exist under the given
// budget, e.g. reconstructing a min-max segmentation with too small a cap.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An internal self-check failed; indicates a bug, not a usage problem.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace segkit
