#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qgl2/checked.hpp"

namespace qgl2 {

/// A weight (a, b) of the GL2 torus. Dominance (a >= b) is not enforced by
/// the type itself; operations that need it call require_dominant().
struct DominantWeight {
    Int a = 0;
    Int b = 0;

    constexpr bool is_dominant() const { return a >= b; }
    /// a - b, the coordinate that decides restricted / saturated membership.
    Int difference() const { return checked_sub(a, b); }
    Int degree() const { return checked_add(a, b); }

    friend constexpr auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

std::string to_string(const DominantWeight& w);

/// Throws DomainError unless w.a >= w.b.
void require_dominant(const DominantWeight& w, const char* what = "weight");

/// Order ell of the root of unity and characteristic p of the ground field.
/// Construction validates ell >= 2, p prime, p does not divide ell.
class ModularParams {
public:
    ModularParams(Int ell, Int p);

    Int ell() const { return ell_; }
    Int p() const { return p_; }

    friend bool operator==(const ModularParams&, const ModularParams&) = default;

private:
    Int ell_;
    Int p_;
};

bool is_prime(Int n);

/// a = tau + ell * sum_i digits[i] * p^i, with 0 <= tau < ell, 0 <= digits[i] < p
/// and no trailing zero digit.
struct LpExpansion {
    Int tau = 0;
    std::vector<Int> digits;

    friend bool operator==(const LpExpansion&, const LpExpansion&) = default;
};

bool is_restricted(const DominantWeight& lam, Int m);
bool in_pi(const DominantWeight& lam, Int m);

/// The second highest weight in the tilting character of lam, for lam in
/// pi \ X1 at modulus m: with r = a - b - m, returns (a - (r+1), b + (r+1)).
DominantWeight linkage_partner(const DominantWeight& lam, Int m);

LpExpansion lp_expansion(Int a, const ModularParams& params);
Int recompose(const LpExpansion& exp, const ModularParams& params);

/// Tensoring by the k-th power of the quantum determinant.
DominantWeight det_shift(const DominantWeight& lam, Int k);

}  // namespace qgl2
