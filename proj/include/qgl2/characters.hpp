#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qgl2/weights.hpp"

namespace qgl2 {

/// Exponent pair of the monomial x^e1 y^e2, i.e. the element e(e1,e2) of the
/// group algebra of X(T) = Z^2. Negative exponents are allowed.
struct Exponent {
    Int e1 = 0;
    Int e2 = 0;

    friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
    Exponent exponent;
    Int multiplicity = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A finitely supported integer combination of monomials x^e1 y^e2.
///
/// Terms are kept sorted by exponent (lexicographic, ascending) with no zero
/// multiplicities, so two characters are equal iff their term vectors are.
class LaurentCharacter {
public:
    LaurentCharacter() = default;
    LaurentCharacter(std::initializer_list<Term> terms);

    /// Builds a character from arbitrary terms; duplicates are summed and
    /// zero results dropped.
    static LaurentCharacter from_terms(std::vector<Term> terms);
    static LaurentCharacter monomial(Exponent e, Int multiplicity = 1);
    static LaurentCharacter one() { return monomial({0, 0}); }

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Multiplicity of x^e1 y^e2 (zero when absent).
    Int at(Exponent e) const;

    /// Invariance under e1 <-> e2; holds for the character of every module.
    bool is_symmetric() const;

    LaurentCharacter& operator+=(const LaurentCharacter& other);
    LaurentCharacter& operator-=(const LaurentCharacter& other);
    LaurentCharacter scaled(Int factor) const;

    friend bool operator==(const LaurentCharacter&, const LaurentCharacter&) = default;

private:
    explicit LaurentCharacter(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

    std::vector<Term> terms_;
};

LaurentCharacter operator+(LaurentCharacter lhs, const LaurentCharacter& rhs);
LaurentCharacter operator-(LaurentCharacter lhs, const LaurentCharacter& rhs);

/// Integer combination of Weyl characters chi(lambda), keyed by dominant
/// weight. Zero coefficients are never stored.
class ChiExpansion {
public:
    using Map = std::map<DominantWeight, Int>;

    ChiExpansion() = default;
    ChiExpansion(std::initializer_list<std::pair<const DominantWeight, Int>> coeffs);

    /// Adds coeff * chi(w); w must be dominant.
    void add(const DominantWeight& w, Int coeff);
    Int coefficient(const DominantWeight& w) const;

    const Map& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    friend bool operator==(const ChiExpansion&, const ChiExpansion&) = default;

private:
    Map coeffs_;
};

/// chi(a,b) = sum_{i=0}^{a-b} x^{a-i} y^{b+i}.
LaurentCharacter weyl_character(const DominantWeight& lam);

LaurentCharacter multiply(const LaurentCharacter& c1, const LaurentCharacter& c2);

/// Frobenius stretch: x^e1 y^e2 -> x^{m e1} y^{m e2}.
LaurentCharacter stretch(const LaurentCharacter& c, Int m);

/// Evaluation at the identity: the sum of all multiplicities.
Int dimension(const LaurentCharacter& c);

/// Unique expansion of a symmetric character in the Weyl basis.
ChiExpansion chi_decompose(const LaurentCharacter& c);
LaurentCharacter chi_expand(const ChiExpansion& e);

/// chi(a,b) chi(c,d) = sum_{i=0}^{min(a-b, c-d)} chi(a+c-i, b+d+i).
ChiExpansion clebsch_gordan(const DominantWeight& lam, const DominantWeight& mu);

/// "x^2 + 2 x y + y^2"; "0" for the empty character.
std::string format_monomials(const LaurentCharacter& c);
/// "χ(6,0) + χ(4,2)", highest weight first; "0" when empty.
std::string format_chi(const ChiExpansion& e);

}  // namespace qgl2
