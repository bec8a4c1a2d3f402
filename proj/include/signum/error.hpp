#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signum {

enum class ErrorKind {
    RaggedRows,
    UnknownToken,
    NonSquare,
    EmptyInput,
    DimensionMismatch,
    NotTreePattern,
    NotCombinatoriallySymmetric,
    Disconnected,
    CycleBudgetExceeded,
    OrderCapExceeded,
    RunNotOdd,
    CycleNotEven,
    NonFinite,
    ZeroLeading,
    EigenFailure,
    CycleNotInPattern,
    SignMismatch,
    NoStabilization,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind()` lets callers
// branch without parsing messages. Parse errors carry a 1-based location.
class SignumError : public std::runtime_error {
public:
    SignumError(ErrorKind kind, const std::string& message, int row = 0, int col = 0)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind), row_(row), col_(col) {}

    ErrorKind kind() const noexcept { return kind_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    ErrorKind kind_;
    int row_;
    int col_;
};

}  // namespace signum
