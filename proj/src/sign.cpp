#include "signum/sign.hpp"

#include "signum/error.hpp"

#include <cmath>

namespace signum {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::RaggedRows: return "RaggedRows";
        case ErrorKind::UnknownToken: return "UnknownToken";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotTreePattern: return "NotTreePattern";
        case ErrorKind::NotCombinatoriallySymmetric: return "NotCombinatoriallySymmetric";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::CycleBudgetExceeded: return "CycleBudgetExceeded";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::RunNotOdd: return "RunNotOdd";
        case ErrorKind::CycleNotEven: return "CycleNotEven";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ZeroLeading: return "ZeroLeading";
        case ErrorKind::EigenFailure: return "EigenFailure";
        case ErrorKind::CycleNotInPattern: return "CycleNotInPattern";
        case ErrorKind::SignMismatch: return "SignMismatch";
        case ErrorKind::NoStabilization: return "NoStabilization";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

AmbSign operator+(AmbSign a, AmbSign b) noexcept {
    if (a == AmbSign::Ambiguous || b == AmbSign::Ambiguous) return AmbSign::Ambiguous;
    if (a == AmbSign::Zero) return b;
    if (b == AmbSign::Zero) return a;
    return a == b ? a : AmbSign::Ambiguous;
}

AmbSign operator*(AmbSign a, AmbSign b) noexcept {
    if (a == AmbSign::Zero || b == AmbSign::Zero) return AmbSign::Zero;
    if (a == AmbSign::Ambiguous || b == AmbSign::Ambiguous) return AmbSign::Ambiguous;
    return static_cast<AmbSign>(static_cast<std::int8_t>(a) * static_cast<std::int8_t>(b));
}

Sign sign_of(double v, double zero_tol) noexcept {
    if (std::abs(v) <= zero_tol) return Sign::Zero;
    return v > 0 ? Sign::Plus : Sign::Minus;
}

char to_char(Sign s) noexcept {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        case Sign::Zero: return '0';
    }
    return '?';
}

char to_char(AmbSign s) noexcept {
    switch (s) {
        case AmbSign::Plus: return '+';
        case AmbSign::Minus: return '-';
        case AmbSign::Zero: return '0';
        case AmbSign::Ambiguous: return '#';
    }
    return '?';
}

std::optional<Sign> sign_from_token(std::string_view token) noexcept {
    if (token == "+") return Sign::Plus;
    if (token == "-") return Sign::Minus;
    if (token == "0") return Sign::Zero;
    return std::nullopt;
}

}  // namespace signum
