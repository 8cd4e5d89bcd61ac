#include "qgl2/render.hpp"

#include <sstream>

namespace qgl2 {

namespace {

std::string pair_text(const DominantWeight& w) {
    std::ostringstream os;
    os << '(' << w.a << ',' << w.b << ')';
    return os.str();
}

std::string multiplicity_prefix(Int m) { return m == 1 ? "" : std::to_string(m) + " "; }

nlohmann::ordered_json weight_json(const DominantWeight& w) { return nlohmann::ordered_json::array({w.a, w.b}); }

// Input weights of the form (a,0) print as the bare integer a.
nlohmann::ordered_json input_json(const DominantWeight& w) {
    if (w.b == 0) return w.a;
    return weight_json(w);
}

std::string input_csv(const DominantWeight& w) {
    if (w.b == 0) return std::to_string(w.a);
    return '"' + std::to_string(w.a) + ',' + std::to_string(w.b) + '"';
}

}  // namespace

OutputRecord make_record(Decomposition d, bool verify) {
    OutputRecord r{std::move(d), 0, 0, false, {}};
    if (verify) {
        const VerificationReport report = verify_decomposition(r.decomposition);
        r.lhs_dim = report.lhs_dim;
        r.rhs_dim = report.rhs_dim;
        r.verified = report.passed;
        if (!report.passed) r.failure = report.summary();
        return r;
    }
    const Decomposition& dec = r.decomposition;
    r.lhs_dim = checked_mul(simple_dimension(dec.lambda.difference(), dec.params),
                            simple_dimension(dec.mu.difference(), dec.params));
    for (const auto& s : dec.summands) r.rhs_dim = checked_add(r.rhs_dim, summand_dimension(s));
    return r;
}

std::string render_summand_text(const TwistedTiltingSummand& s) {
    std::string out = multiplicity_prefix(s.multiplicity) + "T" + pair_text(s.quantum.weight());
    if (s.levels.empty()) return out;
    std::string inner;
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
        if (i > 0) inner += " ⊗ ";
        inner += "T̄" + pair_text(s.levels[i].weight());
        if (i == 1) inner += "^F̄";
        if (i > 1) inner += "^F̄^" + std::to_string(i);
    }
    out += " ⊗ ";
    out += s.levels.size() == 1 ? inner + "^F" : "(" + inner + ")^F";
    return out;
}

std::string render_text(const Decomposition& d, const std::string& separator) {
    std::string out;
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        if (i > 0) out += separator;
        out += render_summand_text(d.summands[i]);
    }
    return out;
}

std::string render_latex(const Decomposition& d) {
    std::string out;
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        const TwistedTiltingSummand& s = d.summands[k];
        if (k > 0) out += "\\oplus ";
        out += multiplicity_prefix(s.multiplicity) + "T" + pair_text(s.quantum.weight());
        if (s.levels.empty()) continue;
        std::string inner;
        for (std::size_t i = 0; i < s.levels.size(); ++i) {
            if (i > 0) inner += "\\otimes ";
            inner += "\\overline{T}" + pair_text(s.levels[i].weight());
            if (i == 1) inner += "^{\\overline{F}}";
            if (i > 1) inner += "^{\\overline{F}^{" + std::to_string(i) + "}}";
        }
        out += "\\otimes ";
        out += s.levels.size() == 1 ? inner + "^{F}" : "\\left(" + inner + "\\right)^{F}";
    }
    return out;
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
    const Decomposition& d = r.decomposition;
    nlohmann::ordered_json summands = nlohmann::ordered_json::array();
    for (const auto& s : d.summands) {
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (const auto& level : s.levels) levels.push_back(weight_json(level.weight()));
        summands.push_back({{"multiplicity", s.multiplicity},
                            {"quantum_weight", weight_json(s.quantum.weight())},
                            {"classical_levels", std::move(levels)}});
    }
    return {{"a", input_json(d.lambda)},
            {"b", input_json(d.mu)},
            {"ell", d.params.ell()},
            {"p", d.params.p()},
            {"summands", std::move(summands)},
            {"dimensions", {{"lhs", r.lhs_dim}, {"rhs", r.rhs_dim}}},
            {"verified", r.verified}};
}

std::string csv_header() { return "a,b,ell,p,num_summands,summands,dim,verified"; }

std::string to_csv_row(const OutputRecord& r) {
    const Decomposition& d = r.decomposition;
    std::ostringstream os;
    os << input_csv(d.lambda) << ',' << input_csv(d.mu) << ',' << d.params.ell() << ',' << d.params.p() << ','
       << d.summand_count() << ",\"" << render_text(d, " + ") << "\"," << r.lhs_dim << ','
       << (r.verified ? "true" : "false");
    return os.str();
}

}  // namespace qgl2
