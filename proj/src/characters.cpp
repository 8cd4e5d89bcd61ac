#include "qgl2/characters.hpp"

#include <algorithm>
#include <sstream>

namespace qgl2 {

namespace {

// One homogeneous component: every monomial has e1 + e2 == degree.
// Terms are (e1, multiplicity), ascending in e1.
struct Component {
    Int degree = 0;
    std::vector<std::pair<Int, Int>> terms;
};

std::vector<Component> split_by_degree(const LaurentCharacter& c) {
    std::vector<std::pair<Int, Term>> keyed;
    keyed.reserve(c.size());
    for (const Term& t : c.terms())
        keyed.emplace_back(checked_add(t.exponent.e1, t.exponent.e2), t);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Component> out;
    for (const auto& [degree, term] : keyed) {
        if (out.empty() || out.back().degree != degree) out.push_back({degree, {}});
        out.back().terms.emplace_back(term.exponent.e1, term.multiplicity);
    }
    return out;
}

// Dense accumulation is used when the e1 span of an output degree is not much
// larger than the number of products landing in it.
constexpr Int kDenseSlack = 1024;

void multiply_into(Int degree, const std::vector<std::pair<const Component*, const Component*>>& pairs,
                   std::vector<Term>& out) {
    Int lo = 0, hi = 0, products = 0;
    bool first = true;
    for (const auto& [p, q] : pairs) {
        const Int plo = checked_add(p->terms.front().first, q->terms.front().first);
        const Int phi = checked_add(p->terms.back().first, q->terms.back().first);
        lo = first ? plo : std::min(lo, plo);
        hi = first ? phi : std::max(hi, phi);
        first = false;
        products = checked_add(products, checked_mul(static_cast<Int>(p->terms.size()),
                                                     static_cast<Int>(q->terms.size())));
    }
    const Int width = checked_add(checked_sub(hi, lo), 1);

    auto emit = [&](Int e1, Int mult) {
        if (mult != 0) out.push_back({{e1, checked_sub(degree, e1)}, mult});
    };

    if (width <= checked_add(checked_mul(4, products), kDenseSlack)) {
        std::vector<Int> row(static_cast<std::size_t>(width), 0);
        for (const auto& [p, q] : pairs)
            for (const auto& [e1p, mp] : p->terms)
                for (const auto& [e1q, mq] : q->terms) {
                    Int& slot = row[static_cast<std::size_t>(e1p + e1q - lo)];
                    slot = checked_add(slot, checked_mul(mp, mq));
                }
        for (Int i = 0; i < width; ++i) emit(lo + i, row[static_cast<std::size_t>(i)]);
        return;
    }

    std::vector<std::pair<Int, Int>> raw;
    raw.reserve(static_cast<std::size_t>(products));
    for (const auto& [p, q] : pairs)
        for (const auto& [e1p, mp] : p->terms)
            for (const auto& [e1q, mq] : q->terms) raw.emplace_back(e1p + e1q, checked_mul(mp, mq));
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < raw.size();) {
        Int sum = 0;
        std::size_t j = i;
        for (; j < raw.size() && raw[j].first == raw[i].first; ++j) sum = checked_add(sum, raw[j].second);
        emit(raw[i].first, sum);
        i = j;
    }
}

// Weyl coefficients of one homogeneous component of a symmetric character.
//
// Leading-term subtraction walks the dominant half from the largest e1 down.
// Every chi(a,b) already subtracted with a > e1 covers position e1, so the
// residual at e1 is m(e1) minus the running sum of emitted coefficients.
// Between stored monomials the residual is -carry, which is emitted once at
// the first gap position and is zero afterwards; so only stored positions and
// the position just below each need visiting.
void decompose_component(const Component& comp, ChiExpansion& out) {
    const Int degree = comp.degree;
    auto dominant = [degree](Int e1) { return checked_mul(2, e1) >= degree; };
    auto stored = [&comp](Int e1) -> Int {
        auto it = std::lower_bound(comp.terms.begin(), comp.terms.end(), std::pair<Int, Int>{e1, 0},
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        return (it != comp.terms.end() && it->first == e1) ? it->second : 0;
    };

    std::vector<Int> visit;
    for (const auto& [e1, mult] : comp.terms) {
        if (!dominant(e1)) continue;
        visit.push_back(e1);
        if (dominant(e1 - 1)) visit.push_back(e1 - 1);
    }
    std::sort(visit.begin(), visit.end(), std::greater<>());
    visit.erase(std::unique(visit.begin(), visit.end()), visit.end());

    // Emitted (a, coefficient), descending in a.
    std::vector<std::pair<Int, Int>> emitted;
    Int carry = 0;
    for (Int e1 : visit) {
        const Int residual = checked_sub(stored(e1), carry);
        if (residual == 0) continue;
        emitted.emplace_back(e1, residual);
        carry = checked_add(carry, residual);
    }

    // Remaining residual on the non-dominant half must vanish. At position
    // (e1, e2) with e1 < e2 the subtracted chi(a,b) with a >= e2 contribute.
    std::vector<Int> prefix{0};
    for (const auto& [a, n] : emitted) prefix.push_back(checked_add(prefix.back(), n));
    auto covered = [&](Int e2) {
        auto it = std::partition_point(emitted.begin(), emitted.end(),
                                       [e2](const auto& item) { return item.first >= e2; });
        return prefix[static_cast<std::size_t>(it - emitted.begin())];
    };
    std::vector<Int> probe;  // e2 values to test
    for (const auto& [e1, mult] : comp.terms)
        if (!dominant(e1)) {
            const Int e2 = degree - e1;
            probe.push_back(e2);
            probe.push_back(e2 - 1);
        }
    for (const auto& [a, n] : emitted) {
        probe.push_back(a);
        probe.push_back(a - 1);
    }
    for (Int e2 : probe) {
        const Int e1 = degree - e2;
        if (dominant(e1)) continue;
        if (stored(e1) != covered(e2))
            throw NotRepresentableError("leading term x^" + std::to_string(e1) + " y^" +
                                        std::to_string(e2) + " is not dominant");
    }

    for (const auto& [a, n] : emitted) out.add({a, degree - a}, n);
}

std::string monomial_text(const Exponent& e) {
    std::string s;
    auto var = [&s](char name, Int power) {
        if (power == 0) return;
        if (!s.empty()) s += ' ';
        s += name;
        if (power != 1) s += '^' + std::to_string(power);
    };
    var('x', e.e1);
    var('y', e.e2);
    return s;
}

template <typename Item, typename Render>
std::string join_signed(const std::vector<Item>& items, Render render) {
    if (items.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Item& item : items) {
        auto [coeff, body] = render(item);
        const bool negative = coeff < 0;
        const Int magnitude = negative ? -coeff : coeff;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (body.empty())
            s += std::to_string(magnitude);
        else if (magnitude != 1)
            s += std::to_string(magnitude) + ' ' + body;
        else
            s += body;
        first = false;
    }
    return s;
}

}  // namespace

LaurentCharacter::LaurentCharacter(std::initializer_list<Term> terms)
    : LaurentCharacter(from_terms(std::vector<Term>(terms))) {}

LaurentCharacter LaurentCharacter::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const Term& t : terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent)
            merged.back().multiplicity = checked_add(merged.back().multiplicity, t.multiplicity);
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.multiplicity == 0; });
    return LaurentCharacter(std::move(merged));
}

LaurentCharacter LaurentCharacter::monomial(Exponent e, Int multiplicity) {
    if (multiplicity == 0) return {};
    return LaurentCharacter(std::vector<Term>{{e, multiplicity}});
}

Int LaurentCharacter::at(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exponent < x; });
    return (it != terms_.end() && it->exponent == e) ? it->multiplicity : 0;
}

bool LaurentCharacter::is_symmetric() const {
    return std::all_of(terms_.begin(), terms_.end(), [this](const Term& t) {
        return at({t.exponent.e2, t.exponent.e1}) == t.multiplicity;
    });
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& other) {
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = from_terms(std::move(all));
    return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& other) {
    return *this += other.scaled(-1);
}

LaurentCharacter LaurentCharacter::scaled(Int factor) const {
    if (factor == 0) return {};
    std::vector<Term> out = terms_;
    for (Term& t : out) t.multiplicity = checked_mul(t.multiplicity, factor);
    return LaurentCharacter(std::move(out));
}

LaurentCharacter operator+(LaurentCharacter lhs, const LaurentCharacter& rhs) { return lhs += rhs; }
LaurentCharacter operator-(LaurentCharacter lhs, const LaurentCharacter& rhs) { return lhs -= rhs; }

ChiExpansion::ChiExpansion(std::initializer_list<std::pair<const DominantWeight, Int>> coeffs) {
    for (const auto& [w, n] : coeffs) add(w, n);
}

void ChiExpansion::add(const DominantWeight& w, Int coeff) {
    require_dominant(w, "Weyl character weight");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(w, coeff);
    if (inserted) return;
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) coeffs_.erase(it);
}

Int ChiExpansion::coefficient(const DominantWeight& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0 : it->second;
}

LaurentCharacter weyl_character(const DominantWeight& lam) {
    require_dominant(lam);
    const Int span = lam.difference();
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(span) + 1);
    // Ascending e1 is ascending exponent order.
    for (Int i = span; i >= 0; --i) terms.push_back({{lam.a - i, lam.b + i}, 1});
    return LaurentCharacter::from_terms(std::move(terms));
}

LaurentCharacter multiply(const LaurentCharacter& c1, const LaurentCharacter& c2) {
    if (c1.empty() || c2.empty()) return {};
    const auto left = split_by_degree(c1);
    const auto right = split_by_degree(c2);

    std::map<Int, std::vector<std::pair<const Component*, const Component*>>> by_degree;
    for (const Component& p : left)
        for (const Component& q : right) by_degree[checked_add(p.degree, q.degree)].emplace_back(&p, &q);

    std::vector<Term> out;
    for (const auto& [degree, pairs] : by_degree) multiply_into(degree, pairs, out);
    return LaurentCharacter::from_terms(std::move(out));
}

LaurentCharacter stretch(const LaurentCharacter& c, Int m) {
    if (m < 1) throw DomainError("stretch factor must be at least 1, got " + std::to_string(m));
    std::vector<Term> out;
    out.reserve(c.size());
    for (const Term& t : c.terms())
        out.push_back({{checked_mul(t.exponent.e1, m), checked_mul(t.exponent.e2, m)}, t.multiplicity});
    return LaurentCharacter::from_terms(std::move(out));
}

Int dimension(const LaurentCharacter& c) {
    Int sum = 0;
    for (const Term& t : c.terms()) sum = checked_add(sum, t.multiplicity);
    return sum;
}

ChiExpansion chi_decompose(const LaurentCharacter& c) {
    if (!c.is_symmetric()) throw NotSymmetricError("character is not symmetric under e1 <-> e2");
    ChiExpansion out;
    for (const Component& comp : split_by_degree(c)) decompose_component(comp, out);
    return out;
}

LaurentCharacter chi_expand(const ChiExpansion& e) {
    std::vector<Term> terms;
    for (const auto& [w, n] : e.coeffs())
        for (Int i = 0; i <= w.difference(); ++i) terms.push_back({{w.a - i, w.b + i}, n});
    return LaurentCharacter::from_terms(std::move(terms));
}

ChiExpansion clebsch_gordan(const DominantWeight& lam, const DominantWeight& mu) {
    require_dominant(lam);
    require_dominant(mu);
    const Int count = std::min(lam.difference(), mu.difference());
    const Int top_a = checked_add(lam.a, mu.a);
    const Int top_b = checked_add(lam.b, mu.b);
    ChiExpansion out;
    for (Int i = 0; i <= count; ++i) out.add({top_a - i, top_b + i}, 1);
    return out;
}

std::string format_monomials(const LaurentCharacter& c) {
    std::vector<Term> desc(c.terms().rbegin(), c.terms().rend());
    return join_signed(desc, [](const Term& t) {
        return std::pair<Int, std::string>{t.multiplicity, monomial_text(t.exponent)};
    });
}

std::string format_chi(const ChiExpansion& e) {
    std::vector<std::pair<DominantWeight, Int>> desc(e.coeffs().rbegin(), e.coeffs().rend());
    return join_signed(desc, [](const auto& item) {
        std::ostringstream os;
        os << "χ(" << item.first.a << ',' << item.first.b << ')';
        return std::pair<Int, std::string>{item.second, os.str()};
    });
}

}  // namespace qgl2
