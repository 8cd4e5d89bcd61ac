#include "qgl2/tilting.hpp"

#include <algorithm>

namespace qgl2 {

TiltingLabel::TiltingLabel(DominantWeight weight, Int modulus) : weight_(weight), modulus_(modulus) {
    require_dominant(weight, "tilting weight");
    if (!in_pi(weight, modulus))
        throw RegionError("tilting weight " + to_string(weight) + " lies outside pi for modulus " +
                          std::to_string(modulus));
}

ChiExpansion tilting_character(const TiltingLabel& t) {
    ChiExpansion out{{t.weight(), 1}};
    if (!is_restricted(t.weight(), t.modulus())) out.add(linkage_partner(t.weight(), t.modulus()), 1);
    return out;
}

std::vector<TiltingLabel> greedy_tilting_decompose(const ChiExpansion& e, Int m) {
    ChiExpansion::Map remaining = e.coeffs();
    std::vector<TiltingLabel> out;
    while (!remaining.empty()) {
        const auto top = std::prev(remaining.end());
        const DominantWeight gamma = top->first;
        const Int count = top->second;
        if (count < 0)
            throw NegativeCoefficientError("coefficient of χ" + to_string(gamma) + " is " +
                                           std::to_string(count));
        if (!in_pi(gamma, m))
            throw RegionError("weight " + to_string(gamma) + " lies outside pi for modulus " +
                              std::to_string(m));
        const TiltingLabel label(gamma, m);
        out.insert(out.end(), static_cast<std::size_t>(count), label);
        const ChiExpansion removed = tilting_character(label);
        for (const auto& [w, n] : removed.coeffs()) {
            auto it = remaining.find(w);
            const Int left = checked_sub(it == remaining.end() ? 0 : it->second, checked_mul(n, count));
            if (left < 0)
                throw NegativeCoefficientError("removing " + std::to_string(count) + " x T" + to_string(gamma) +
                                               " leaves coefficient " + std::to_string(left) + " at χ" +
                                               to_string(w));
            if (left == 0)
                remaining.erase(it);
            else
                it->second = left;
        }
    }
    return out;
}

std::vector<TiltingLabel> restricted_tensor_decompose(const DominantWeight& lam, const DominantWeight& mu,
                                                      Int m) {
    require_dominant(lam);
    require_dominant(mu);
    if (!is_restricted(lam, m) || !is_restricted(mu, m))
        throw DomainError("restricted tensor product needs both weights in X1 for modulus " +
                          std::to_string(m) + ", got " + to_string(lam) + " and " + to_string(mu));
    return greedy_tilting_decompose(clebsch_gordan(lam, mu), m);
}

bool is_indecomposable_restricted_tensor(const DominantWeight& lam, const DominantWeight& mu, Int m) {
    require_dominant(lam);
    require_dominant(mu);
    if (!is_restricted(lam, m) || !is_restricted(mu, m))
        throw DomainError("indecomposability criterion needs both weights in X1 for modulus " +
                          std::to_string(m));
    const Int a = lam.difference();
    const Int b = mu.difference();
    return std::min(a, b) == 0 || (a == m - 1 && b == 1) || (a == 1 && b == m - 1);
}

}  // namespace qgl2
