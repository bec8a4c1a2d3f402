#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace signum {

// Entry of a sign pattern. The underlying values are the numeric signs so
// products reduce to integer multiplication.
enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

// Result of combining signs additively: a sum of a Plus and a Minus term has
// no determined sign.
enum class AmbSign : std::int8_t { Minus = -1, Zero = 0, Plus = 1, Ambiguous = 2 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign sign_of_int(int v) noexcept {
    return v > 0 ? Sign::Plus : (v < 0 ? Sign::Minus : Sign::Zero);
}

constexpr Sign operator*(Sign a, Sign b) noexcept { return sign_of_int(to_int(a) * to_int(b)); }
constexpr Sign operator-(Sign a) noexcept { return sign_of_int(-to_int(a)); }

constexpr AmbSign to_amb(Sign s) noexcept { return static_cast<AmbSign>(static_cast<std::int8_t>(s)); }

AmbSign operator+(AmbSign a, AmbSign b) noexcept;
AmbSign operator*(AmbSign a, AmbSign b) noexcept;
inline AmbSign operator+(AmbSign a, Sign b) noexcept { return a + to_amb(b); }

Sign sign_of(double v, double zero_tol = 0.0) noexcept;

char to_char(Sign s) noexcept;
char to_char(AmbSign s) noexcept;  // '#' for Ambiguous
std::optional<Sign> sign_from_token(std::string_view token) noexcept;

}  // namespace signum
