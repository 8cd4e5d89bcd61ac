#include "qgl2/weights.hpp"

#include <sstream>

namespace qgl2 {

namespace {

void require_modulus(Int m) {
    if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
}

}  // namespace

std::string to_string(const DominantWeight& w) {
    std::ostringstream os;
    os << '(' << w.a << ',' << w.b << ')';
    return os.str();
}

void require_dominant(const DominantWeight& w, const char* what) {
    if (!w.is_dominant())
        throw DomainError(std::string(what) + " " + to_string(w) + " is not dominant (need a >= b)");
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

ModularParams::ModularParams(Int ell, Int p) : ell_(ell), p_(p) {
    if (ell < 2) throw DomainError("ell must be at least 2, got " + std::to_string(ell));
    if (!is_prime(p)) throw DomainError("p must be prime, got " + std::to_string(p));
    if (ell % p == 0)
        throw DomainError("p = " + std::to_string(p) + " divides ell = " + std::to_string(ell));
}

bool is_restricted(const DominantWeight& lam, Int m) {
    require_modulus(m);
    const Int d = lam.difference();
    return 0 <= d && d <= m - 1;
}

bool in_pi(const DominantWeight& lam, Int m) {
    require_modulus(m);
    const Int d = lam.difference();
    return 0 <= d && d <= checked_mul(2, m - 1);
}

DominantWeight linkage_partner(const DominantWeight& lam, Int m) {
    require_modulus(m);
    const Int d = lam.difference();
    if (d < m || d > 2 * (m - 1))
        throw DomainError("linkage partner needs " + std::to_string(m) + " <= a-b <= " +
                          std::to_string(2 * (m - 1)) + ", got " + to_string(lam));
    const Int shift = d - m + 1;  // r + 1
    return {checked_sub(lam.a, shift), checked_add(lam.b, shift)};
}

LpExpansion lp_expansion(Int a, const ModularParams& params) {
    if (a < 0) throw DomainError("(ell,p) expansion needs a >= 0, got " + std::to_string(a));
    LpExpansion out;
    out.tau = a % params.ell();
    for (Int rest = a / params.ell(); rest > 0; rest /= params.p())
        out.digits.push_back(rest % params.p());
    return out;
}

Int recompose(const LpExpansion& exp, const ModularParams& params) {
    if (exp.tau < 0 || exp.tau >= params.ell())
        throw DomainError("tau out of range [0, ell-1]: " + std::to_string(exp.tau));
    if (!exp.digits.empty() && exp.digits.back() == 0)
        throw DomainError("expansion has a trailing zero digit");
    Int sum = 0;
    Int power = 1;
    for (std::size_t i = 0; i < exp.digits.size(); ++i) {
        const Int digit = exp.digits[i];
        if (digit < 0 || digit >= params.p())
            throw DomainError("digit out of range [0, p-1]: " + std::to_string(digit));
        sum = checked_add(sum, checked_mul(digit, power));
        if (i + 1 < exp.digits.size()) power = checked_mul(power, params.p());
    }
    return checked_add(exp.tau, checked_mul(params.ell(), sum));
}

DominantWeight det_shift(const DominantWeight& lam, Int k) {
    return {checked_add(lam.a, k), checked_add(lam.b, k)};
}

}  // namespace qgl2
