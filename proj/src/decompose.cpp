#include "qgl2/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace qgl2 {

namespace {

void require_nonnegative(Int a, const char* name) {
    if (a < 0) throw DomainError(std::string(name) + " must be nonnegative, got " + std::to_string(a));
}

// Frobenius stretch factor for classical level i: ell * p^i.
Int level_twist(const ModularParams& params, std::size_t level) {
    Int factor = params.ell();
    for (std::size_t i = 0; i < level; ++i) factor = checked_mul(factor, params.p());
    return factor;
}

Int tilting_dimension(const TiltingLabel& t) {
    Int dim = 0;
    const ChiExpansion character = tilting_character(t);
    for (const auto& [w, n] : character.coeffs())
        dim = checked_add(dim, checked_mul(n, checked_add(w.difference(), 1)));
    return dim;
}

void canonicalize(std::vector<TwistedTiltingSummand>& summands) {
    for (auto& s : summands)
        while (!s.levels.empty() && s.levels.back().is_trivial()) s.levels.pop_back();
    std::sort(summands.begin(), summands.end(), summand_precedes);
    std::vector<TwistedTiltingSummand> merged;
    for (auto& s : summands) {
        if (!merged.empty() && merged.back().quantum == s.quantum && merged.back().levels == s.levels)
            merged.back().multiplicity = checked_add(merged.back().multiplicity, s.multiplicity);
        else
            merged.push_back(std::move(s));
    }
    summands = std::move(merged);
}

}  // namespace

std::vector<Int> TwistedTiltingSummand::flattened_weights() const {
    std::vector<Int> out{quantum.weight().a, quantum.weight().b};
    for (const auto& level : levels) {
        out.push_back(level.weight().a);
        out.push_back(level.weight().b);
    }
    return out;
}

bool summand_precedes(const TwistedTiltingSummand& x, const TwistedTiltingSummand& y) {
    return x.flattened_weights() > y.flattened_weights();
}

std::size_t Decomposition::summand_count() const {
    std::size_t n = 0;
    for (const auto& s : summands) n += static_cast<std::size_t>(s.multiplicity);
    return n;
}

LevelDecompositions level_decompositions(Int a, Int b, const ModularParams& params) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    LpExpansion ea = lp_expansion(a, params);
    LpExpansion eb = lp_expansion(b, params);
    const std::size_t levels = std::max(ea.digits.size(), eb.digits.size());
    ea.digits.resize(levels, 0);
    eb.digits.resize(levels, 0);

    LevelDecompositions out;
    out.quantum = restricted_tensor_decompose({ea.tau, 0}, {eb.tau, 0}, params.ell());
    for (std::size_t i = 0; i < levels; ++i)
        out.classical.push_back(restricted_tensor_decompose({ea.digits[i], 0}, {eb.digits[i], 0}, params.p()));
    return out;
}

LaurentCharacter simple_character(Int a, const ModularParams& params) {
    require_nonnegative(a, "a");
    const LpExpansion exp = lp_expansion(a, params);
    LaurentCharacter out = weyl_character({exp.tau, 0});
    for (std::size_t i = 0; i < exp.digits.size(); ++i) {
        if (exp.digits[i] == 0) continue;
        out = multiply(out, stretch(weyl_character({exp.digits[i], 0}), level_twist(params, i)));
    }
    return out;
}

LaurentCharacter simple_character(const DominantWeight& lam, const ModularParams& params) {
    require_dominant(lam);
    return multiply(LaurentCharacter::monomial({lam.b, lam.b}), simple_character(lam.difference(), params));
}

Int simple_dimension(Int a, const ModularParams& params) {
    require_nonnegative(a, "a");
    const LpExpansion exp = lp_expansion(a, params);
    Int dim = exp.tau + 1;
    for (Int digit : exp.digits) dim = checked_mul(dim, digit + 1);
    return dim;
}

Decomposition tensor_decompose(Int a, Int b, const ModularParams& params) {
    const LevelDecompositions parts = level_decompositions(a, b, params);

    std::vector<TwistedTiltingSummand> summands;
    for (const TiltingLabel& q : parts.quantum) summands.push_back({q, {}, 1});
    for (const auto& level : parts.classical) {
        std::vector<TwistedTiltingSummand> next;
        next.reserve(summands.size() * level.size());
        for (const auto& partial : summands)
            for (const TiltingLabel& t : level) {
                TwistedTiltingSummand s = partial;
                s.levels.push_back(t);
                next.push_back(std::move(s));
            }
        summands = std::move(next);
    }
    canonicalize(summands);
    return {params, {a, 0}, {b, 0}, std::move(summands)};
}

Decomposition general_tensor_decompose(const DominantWeight& lam, const DominantWeight& mu,
                                       const ModularParams& params) {
    require_dominant(lam);
    require_dominant(mu);
    Decomposition d = tensor_decompose(lam.difference(), mu.difference(), params);
    const Int shift = checked_add(lam.b, mu.b);
    for (auto& s : d.summands) s.quantum = TiltingLabel(det_shift(s.quantum.weight(), shift), params.ell());
    canonicalize(d.summands);
    d.lambda = lam;
    d.mu = mu;
    return d;
}

LaurentCharacter summand_character(const TwistedTiltingSummand& s, const ModularParams& params) {
    if (s.quantum.modulus() != params.ell())
        throw DomainError("quantum tilting label has modulus " + std::to_string(s.quantum.modulus()) +
                          ", expected ell = " + std::to_string(params.ell()));
    LaurentCharacter out = chi_expand(tilting_character(s.quantum));
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
        const TiltingLabel& level = s.levels[i];
        if (level.modulus() != params.p())
            throw DomainError("classical tilting label has modulus " + std::to_string(level.modulus()) +
                              ", expected p = " + std::to_string(params.p()));
        if (level.is_trivial()) continue;
        out = multiply(out, stretch(chi_expand(tilting_character(level)), level_twist(params, i)));
    }
    return out.scaled(s.multiplicity);
}

Int summand_dimension(const TwistedTiltingSummand& s) {
    Int dim = tilting_dimension(s.quantum);
    for (const auto& level : s.levels) dim = checked_mul(dim, tilting_dimension(level));
    return checked_mul(dim, s.multiplicity);
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    if (passed) {
        os << "OK dim=" << lhs_dim;
    } else if (first_mismatch) {
        const Mismatch& m = *first_mismatch;
        os << "FAIL at x^" << m.monomial.e1 << " y^" << m.monomial.e2 << ": product has multiplicity "
           << m.lhs << ", summands give " << m.rhs << " (dim " << lhs_dim << " vs " << rhs_dim << ')';
    } else {
        os << "FAIL dimension mismatch: " << lhs_dim << " vs " << rhs_dim;
    }
    return os.str();
}

VerificationReport verify_decomposition(const Decomposition& d) {
    const LaurentCharacter lhs =
        multiply(simple_character(d.lambda, d.params), simple_character(d.mu, d.params));
    std::vector<Term> rhs_terms;
    Int rhs_formula_dim = 0;
    for (const auto& s : d.summands) {
        const LaurentCharacter c = summand_character(s, d.params);
        rhs_terms.insert(rhs_terms.end(), c.terms().begin(), c.terms().end());
        rhs_formula_dim = checked_add(rhs_formula_dim, summand_dimension(s));
    }
    const LaurentCharacter rhs = LaurentCharacter::from_terms(std::move(rhs_terms));

    VerificationReport report;
    report.lhs_dim = dimension(lhs);
    report.rhs_dim = dimension(rhs);

    // Walk both term lists from the highest monomial down.
    auto l = lhs.terms().rbegin();
    auto r = rhs.terms().rbegin();
    while (l != lhs.terms().rend() || r != rhs.terms().rend()) {
        if (r == rhs.terms().rend() || (l != lhs.terms().rend() && l->exponent > r->exponent)) {
            report.first_mismatch = Mismatch{l->exponent, l->multiplicity, 0};
            break;
        }
        if (l == lhs.terms().rend() || r->exponent > l->exponent) {
            report.first_mismatch = Mismatch{r->exponent, 0, r->multiplicity};
            break;
        }
        if (l->multiplicity != r->multiplicity) {
            report.first_mismatch = Mismatch{l->exponent, l->multiplicity, r->multiplicity};
            break;
        }
        ++l;
        ++r;
    }

    const Int lhs_formula_dim = checked_mul(simple_dimension(d.lambda.difference(), d.params),
                                            simple_dimension(d.mu.difference(), d.params));
    report.passed = !report.first_mismatch && report.lhs_dim == report.rhs_dim &&
                    report.lhs_dim == lhs_formula_dim && report.rhs_dim == rhs_formula_dim;
    return report;
}

}  // namespace qgl2
