#pragma once

#include "signum/cycles.hpp"

#include <Eigen/Dense>

#include <vector>

namespace signum {

// Monic: det(xI - A) = x^n + c_{n-1} x^{n-1} + ... + c_0, stored ascending.
struct CharPoly {
    std::vector<double> coeffs;  // coeffs.back() == 1

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

// Hessenberg reduction followed by the Hessenberg determinant recurrence.
// Throws NonFinite.
CharPoly char_poly(const Eigen::MatrixXd& a);

// Coefficient signs with |c| <= 1e-8 * (1 + max|c_i|) treated as zero,
// descending (x^n first).
std::vector<Sign> coefficient_signs(const CharPoly& p);

struct EkSign {
    int k = 0;
    AmbSign sign = AmbSign::Zero;
};

// Sign of the sum of all composite cycles of length k (E_k). Refuses n > 16.
EkSign ek_sign(const SignPattern& p, int k);

// Sign of det over Q(P): Zero (sign singular), Plus/Minus (sign nonsingular)
// or Ambiguous.
AmbSign sign_det(const SignPattern& p);

// Symbolic characteristic polynomial, descending: the x^{n-k} coefficient is
// (-1)^k E_k.
std::vector<AmbSign> symbolic_char_poly(const SignPattern& p);

struct Variations {
    int v_plus = 0;
    int v_minus = 0;

    friend bool operator==(const Variations&, const Variations&) = default;
};

// Sign changes of a descending coefficient sign vector, zeros skipped, and of
// the vector after x -> -x. Throws ZeroLeading.
Variations descartes(const std::vector<Sign>& descending);
Variations descartes(const CharPoly& p);

// Ambiguous entries may resolve to +, - or 0; bounds hold for every resolution.
struct VariationBounds {
    int plus_lo = 0, plus_hi = 0;
    int minus_lo = 0, minus_hi = 0;
};
VariationBounds descartes_bounds(const std::vector<AmbSign>& descending);

}  // namespace signum
