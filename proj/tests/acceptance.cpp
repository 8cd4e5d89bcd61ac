// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qgl2/cli.hpp"
#include "qgl2/decompose.hpp"

using namespace qgl2;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qgl2");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::vector<ModularParams> kParams{{2, 3}, {3, 2}, {4, 3}, {5, 2}, {5, 3}, {7, 2}};

Outcome worked_example(const std::vector<std::string>& flags, const nlohmann::json& expected_weights) {
    Outcome o;
    std::vector<std::string> args{"decompose"};
    args.insert(args.end(), flags.begin(), flags.end());
    args.insert(args.end(), {"--format", "json"});
    const CliResult r = run_cli(args);
    if (r.code != 0) {
        o.fail("exit code " + std::to_string(r.code) + ": " + r.out);
        return o;
    }
    const auto record = nlohmann::json::parse(r.out);
    nlohmann::json got = nlohmann::json::array();
    for (const auto& s : record["summands"]) {
        if (s["multiplicity"] != 1 || !s["classical_levels"].empty()) o.fail("unexpected summand " + s.dump());
        got.push_back(s["quantum_weight"]);
    }
    if (got != expected_weights) o.fail("summands " + got.dump());
    if (record["verified"] != true) o.fail("not verified");
    const CliResult text = run_cli({"decompose", flags[0], flags[1], flags[2], flags[3], flags[4], flags[5], flags[6],
                                    flags[7], "--format", "text"});
    o.detail = o.passed ? text.out.substr(0, text.out.find('\n')) : o.detail;
    return o;
}

Outcome criterion_example_i() {
    return worked_example({"--a", "4", "--b", "2", "--ell", "5", "--p", "3"}, {{6, 0}, {5, 1}});
}

Outcome criterion_example_ii() {
    return worked_example({"--a", "3", "--b", "1", "--ell", "5", "--p", "2"}, {{4, 0}, {3, 1}});
}

Outcome criterion_oracle_suite() {
    Outcome o;
    std::size_t cells = 0;
    for (const auto& params : kParams)
        for (Int a = 0; a <= 150; ++a)
            for (Int b = 0; b <= a; ++b) {
                const VerificationReport report = verify_decomposition(tensor_decompose(a, b, params));
                ++cells;
                if (!report.passed)
                    o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") ell=" +
                           std::to_string(params.ell()) + " p=" + std::to_string(params.p()) + ": " +
                           report.summary());
            }
    if (o.passed) o.detail = std::to_string(cells) + " cells, exact equality";
    return o;
}

Outcome criterion_indecomposability() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& params : kParams)
        for (Int a = 0; a < params.ell(); ++a)
            for (Int b = 0; b < params.ell(); ++b) {
                ++checked;
                const bool closed_form = is_indecomposable_restricted_tensor({a, 0}, {b, 0}, params.ell());
                const bool single = tensor_decompose(a, b, params).summand_count() == 1;
                if (closed_form != single)
                    o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") ell=" +
                           std::to_string(params.ell()));
            }
    if (o.passed) o.detail = std::to_string(checked) + " pairs, zero exceptions";
    return o;
}

Outcome criterion_tilting_structure() {
    Outcome o;
    std::size_t checked = 0;
    for (Int ell : {2, 3, 5, 7})
        for (Int b = 0; b <= 50; ++b)
            for (Int diff = ell; diff <= 2 * (ell - 1); ++diff) {
                const DominantWeight lam{b + diff, b};
                const ChiExpansion t = tilting_character(TiltingLabel(lam, ell));
                ++checked;
                if (t.size() != 2) {
                    o.fail(to_string(lam) + " has " + std::to_string(t.size()) + " terms");
                    continue;
                }
                const DominantWeight low = t.coeffs().begin()->first;
                const DominantWeight high = std::prev(t.coeffs().end())->first;
                if (high != lam || low.degree() != lam.degree() || !is_restricted(low, ell))
                    o.fail(to_string(lam) + " -> partner " + to_string(low));
                for (const auto& [w, n] : t.coeffs())
                    if (n != 1) o.fail(to_string(lam) + " coefficient " + std::to_string(n));
            }
    if (o.passed) o.detail = std::to_string(checked) + " weights in pi \\ X1 (0 <= b <= 50)";
    return o;
}

Outcome criterion_dimension_law() {
    Outcome o;
    for (const auto& params : {ModularParams(5, 2), ModularParams(3, 7)})
        for (Int a = 0; a <= 10000; ++a) {
            const LpExpansion e = lp_expansion(a, params);
            Int expected = e.tau + 1;
            for (Int d : e.digits) expected *= d + 1;
            if (dimension(simple_character(a, params)) != expected)
                o.fail("a=" + std::to_string(a) + " ell=" + std::to_string(params.ell()));
        }
    if (o.passed) o.detail = "a <= 10^4 at (5,2) and (3,7)";
    return o;
}

Outcome criterion_round_trips() {
    Outcome o;
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<Int> coord(0, 40), coeff(1, 10), count(1, 15);
    for (int i = 0; i < 1000; ++i) {
        ChiExpansion e;
        for (Int k = count(rng); k > 0; --k) {
            const Int x = coord(rng), y = coord(rng);
            e.add({std::max(x, y), std::min(x, y)}, coeff(rng));
        }
        if (chi_decompose(chi_expand(e)) != e) o.fail("chi round trip failed on sample " + std::to_string(i));
    }
    std::vector<ModularParams> params = kParams;
    params.emplace_back(3, 7);
    for (const auto& pr : params)
        for (Int a = 0; a <= 100000; ++a) {
            const LpExpansion e = lp_expansion(a, pr);
            const bool canonical = e.digits.empty() || e.digits.back() != 0;
            if (!canonical || recompose(e, pr) != a) {
                o.fail("lp round trip failed at a=" + std::to_string(a));
                break;
            }
        }
    if (o.passed) o.detail = "1000 Weyl expansions; a <= 10^5 at 7 parameter pairs";
    return o;
}

Outcome criterion_clebsch_gordan() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<Int> coord(0, 60);
    for (int i = 0; i < 500; ++i) {
        const Int x = coord(rng), y = coord(rng), u = coord(rng), v = coord(rng);
        const DominantWeight lam{std::max(x, y), std::min(x, y)}, mu{std::max(u, v), std::min(u, v)};
        if (clebsch_gordan(lam, mu) != chi_decompose(multiply(weyl_character(lam), weyl_character(mu))))
            o.fail(to_string(lam) + " x " + to_string(mu));
    }
    if (o.passed) o.detail = "500 random pairs";
    return o;
}

Outcome criterion_determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    for (const std::string format : {"csv", "json"}) {
        std::string contents[2];
        const char* jobs[2] = {"1", "8"};
        for (int k = 0; k < 2; ++k) {
            const auto path = dir / ("qgl2_acceptance_" + format + "_" + jobs[k]);
            const CliResult r = run_cli({"table", "--a-max", "20", "--b-max", "20", "--ell", "5", "--p", "2",
                                         "--format", format, "--jobs", jobs[k], "--out", path.string()});
            if (r.code != 0) o.fail("table exit code " + std::to_string(r.code));
            contents[k] = slurp(path);
            std::filesystem::remove(path);
        }
        if (contents[0].empty() || contents[0] != contents[1]) o.fail(format + " output differs between --jobs 1 and 8");
    }
    if (o.passed) o.detail = "csv and json byte-identical";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;  // <= 0: none stated
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked example (i): L(4,0) x L(2,0), ell=5, p=3", 1.0, criterion_example_i},
        {2, "worked example (ii): L(3,0) x L(1,0), ell=5, p=2", 1.0, criterion_example_ii},
        {3, "oracle suite, 0 <= b <= a <= 150, six parameter pairs", 180.0, criterion_oracle_suite},
        {4, "indecomposability criterion equals single-summand count", 0, criterion_indecomposability},
        {5, "non-restricted tilting characters: two terms, equal degree", 0, criterion_tilting_structure},
        {6, "dimension law for simple characters", 10.0, criterion_dimension_law},
        {7, "basis and digit round trips", 0, criterion_round_trips},
        {8, "Clebsch-Gordan closed form vs monomial product", 0, criterion_clebsch_gordan},
        {9, "table determinism across --jobs", 0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            std::ostringstream why;
            why << "took " << seconds << " s, limit " << c.time_limit_s << " s";
            o.fail(why.str());
        }
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << std::fixed
                  << std::setprecision(2) << seconds << " s)" << (o.detail.empty() ? "" : ": ") << o.detail << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
