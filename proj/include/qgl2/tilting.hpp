#pragma once

#include <vector>

#include "qgl2/characters.hpp"

namespace qgl2 {

/// A special tilting module T(weight) at modulus m (ell for the quantum
/// level, p for a classical level). Only weights in pi for that modulus are
/// representable.
class TiltingLabel {
public:
    /// Throws RegionError if weight is not in pi at this modulus.
    TiltingLabel(DominantWeight weight, Int modulus);

    const DominantWeight& weight() const { return weight_; }
    Int modulus() const { return modulus_; }

    bool is_trivial() const { return weight_ == DominantWeight{0, 0}; }

    friend bool operator==(const TiltingLabel&, const TiltingLabel&) = default;

private:
    DominantWeight weight_;
    Int modulus_;
};

/// chi(lambda) for restricted lambda; chi(lambda) + chi(partner) otherwise.
ChiExpansion tilting_character(const TiltingLabel& t);

/// Splits a nonnegative combination of Weyl characters into special tilting
/// characters by repeatedly removing T(gamma) for the lexicographically
/// highest remaining gamma. The result is sorted by weight, descending.
std::vector<TiltingLabel> greedy_tilting_decompose(const ChiExpansion& e, Int m);

/// L(lam) (x) L(mu) for restricted lam, mu as a sum of tilting modules.
std::vector<TiltingLabel> restricted_tensor_decompose(const DominantWeight& lam,
                                                      const DominantWeight& mu, Int m);

/// Closed-form criterion for L(lam) (x) L(mu) to be indecomposable. Both
/// weights are first reduced to the form (a,0), (b,0) by determinant shifts;
/// the criterion is min(a,b) == 0 or {a,b} == {m-1, 1}.
bool is_indecomposable_restricted_tensor(const DominantWeight& lam, const DominantWeight& mu, Int m);

}  // namespace qgl2
