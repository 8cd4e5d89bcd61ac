#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgl2/tilting.hpp"

namespace qgl2 {

/// T(quantum) (x) ( T̄(levels[0]) (x) T̄(levels[1])^F̄ (x) ... )^F
///
/// The quantum label has modulus ell; each classical level has modulus p and
/// is twisted by ell * p^i. Canonical form drops trailing trivial levels.
struct TwistedTiltingSummand {
    TiltingLabel quantum;
    std::vector<TiltingLabel> levels;
    Int multiplicity = 1;

    /// (quantum.a, quantum.b, levels[0].a, levels[0].b, ...).
    std::vector<Int> flattened_weights() const;

    friend bool operator==(const TwistedTiltingSummand&, const TwistedTiltingSummand&) = default;
};

/// Order used for canonical summand lists: descending lexicographic on the
/// flattened weight tuple.
bool summand_precedes(const TwistedTiltingSummand& x, const TwistedTiltingSummand& y);

/// L(lambda) (x) L(mu) as a multiset of twisted tilting summands.
struct Decomposition {
    ModularParams params;
    DominantWeight lambda;
    DominantWeight mu;
    std::vector<TwistedTiltingSummand> summands;  // canonical order

    std::size_t summand_count() const;
};

/// Per-level tilting decompositions before the Cartesian product is taken.
/// Classical digit lists of the two factors are zero-padded to equal length.
struct LevelDecompositions {
    std::vector<TiltingLabel> quantum;
    std::vector<std::vector<TiltingLabel>> classical;
};

LevelDecompositions level_decompositions(Int a, Int b, const ModularParams& params);

/// Character of L(a,0) via the Steinberg factorization over the (ell,p)
/// expansion of a.
LaurentCharacter simple_character(Int a, const ModularParams& params);
/// Character of L(lam) = d_q^b (x) L(a-b,0).
LaurentCharacter simple_character(const DominantWeight& lam, const ModularParams& params);

/// (tau+1) * prod (a_i+1), without building the character.
Int simple_dimension(Int a, const ModularParams& params);

Decomposition tensor_decompose(Int a, Int b, const ModularParams& params);
Decomposition general_tensor_decompose(const DominantWeight& lam, const DominantWeight& mu,
                                       const ModularParams& params);

LaurentCharacter summand_character(const TwistedTiltingSummand& s, const ModularParams& params);
Int summand_dimension(const TwistedTiltingSummand& s);

struct Mismatch {
    Exponent monomial;
    Int lhs = 0;  // multiplicity in chi(L(lambda)) chi(L(mu))
    Int rhs = 0;  // multiplicity in the sum of summand characters
};

struct VerificationReport {
    bool passed = false;
    Int lhs_dim = 0;
    Int rhs_dim = 0;
    std::optional<Mismatch> first_mismatch;

    /// "OK dim=15" or a one-line description of the first discrepancy.
    std::string summary() const;
};

/// Compares the sum of summand characters with the product of the two simple
/// characters monomial by monomial. Never throws on a mismatch.
VerificationReport verify_decomposition(const Decomposition& d);

}  // namespace qgl2
