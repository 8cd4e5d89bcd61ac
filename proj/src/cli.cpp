#include "qgl2/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "qgl2/render.hpp"

namespace qgl2::cli {

namespace {

Int parse_int(std::string_view text, const std::string& whole) {
    Int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw DomainError("cannot parse weight '" + whole + "' (expected \"a\" or \"a,b\")");
    return value;
}

struct QueryFlags {
    std::string a;
    std::string b;
    Int ell = 0;
    Int p = 0;
};

void add_query_flags(CLI::App& cmd, QueryFlags& flags) {
    cmd.add_option("--a", flags.a, "first highest weight: a or a,b")->required();
    cmd.add_option("--b", flags.b, "second highest weight: b or c,d")->required();
    cmd.add_option("--ell", flags.ell, "order of the root of unity")->required();
    cmd.add_option("--p", flags.p, "characteristic of the field")->required();
}

Decomposition run_query(const QueryFlags& flags) {
    const ModularParams params(flags.ell, flags.p);
    return general_tensor_decompose(parse_weight(flags.a), parse_weight(flags.b), params);
}

int cmd_decompose(const QueryFlags& flags, const std::string& format, bool verify, std::ostream& out,
                  std::ostream& err) {
    const OutputRecord record = make_record(run_query(flags), verify);
    if (format == "json") {
        out << to_json(record).dump() << '\n';
    } else if (format == "latex") {
        out << render_latex(record.decomposition) << '\n';
    } else {
        out << render_text(record.decomposition) << '\n';
        out << (verify ? (record.verified ? "verified" : "NOT verified") : "unverified") << " dim=" << record.lhs_dim
            << '\n';
    }
    if (verify && !record.verified) {
        err << "verification failed: " << record.failure << '\n';
        return kVerificationFailed;
    }
    return kSuccess;
}

int cmd_verify(const QueryFlags& flags, std::ostream& out) {
    const VerificationReport report = verify_decomposition(run_query(flags));
    out << report.summary() << '\n';
    return report.passed ? kSuccess : kVerificationFailed;
}

int cmd_expand(Int a, Int ell, Int p, std::ostream& out) {
    const ModularParams params(ell, p);
    const LpExpansion exp = lp_expansion(a, params);
    out << "tau=" << exp.tau << " digits=[";
    for (std::size_t i = 0; i < exp.digits.size(); ++i) out << (i ? "," : "") << exp.digits[i];
    out << "]\n";
    return kSuccess;
}

struct CharFlags {
    std::optional<std::string> simple;
    std::optional<std::string> weyl;
    std::optional<std::string> tilting;
    std::optional<Int> modulus;
    std::optional<Int> ell;
    std::optional<Int> p;
};

int cmd_char(const CharFlags& flags, std::ostream& out) {
    const int chosen = int(flags.simple.has_value()) + int(flags.weyl.has_value()) + int(flags.tilting.has_value());
    if (chosen != 1) throw DomainError("char needs exactly one of --simple, --weyl, --tilting");

    LaurentCharacter c;
    std::optional<ChiExpansion> chi;
    if (flags.weyl) {
        const DominantWeight w = parse_weight(*flags.weyl);
        c = weyl_character(w);
        chi = ChiExpansion{{w, 1}};
    } else if (flags.tilting) {
        if (!flags.modulus) throw DomainError("--tilting needs --modulus");
        chi = tilting_character(TiltingLabel(parse_weight(*flags.tilting), *flags.modulus));
        c = chi_expand(*chi);
    } else {
        if (!flags.ell || !flags.p) throw DomainError("--simple needs --ell and --p");
        c = simple_character(parse_weight(*flags.simple), ModularParams(*flags.ell, *flags.p));
        chi = chi_decompose(c);
    }
    out << format_monomials(c) << " (dim " << dimension(c) << ")\n";
    out << format_chi(*chi) << '\n';
    return kSuccess;
}

struct TableFlags {
    Int a_max = 0;
    Int b_max = 0;
    Int ell = 0;
    Int p = 0;
    std::string out_path;
    std::string format = "csv";
    int jobs = 1;
    bool no_verify = false;
};

int cmd_table(const TableFlags& flags, std::ostream& out, std::ostream& err) {
    const ModularParams params(flags.ell, flags.p);
    if (flags.a_max < 0 || flags.b_max < 0) throw DomainError("--a-max and --b-max must be nonnegative");
    if (flags.jobs < 1) throw DomainError("--jobs must be at least 1");

    std::vector<std::pair<Int, Int>> cells;
    for (Int a = 0; a <= flags.a_max; ++a)
        for (Int b = 0; b <= std::min(a, flags.b_max); ++b) cells.emplace_back(a, b);

    std::vector<std::optional<OutputRecord>> records(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                records[i] = make_record(tensor_decompose(cells[i].first, cells[i].second, params), !flags.no_verify);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        const auto workers = std::min<std::size_t>(static_cast<std::size_t>(flags.jobs), std::max<std::size_t>(cells.size(), 1));
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::ostringstream body;
    std::size_t failed = 0;
    if (flags.format == "json") {
        body << "[\n";
        for (std::size_t i = 0; i < records.size(); ++i)
            body << to_json(*records[i]).dump() << (i + 1 < records.size() ? ",\n" : "\n");
        body << "]\n";
    } else {
        body << csv_header() << '\n';
        for (const auto& r : records) body << to_csv_row(*r) << '\n';
    }
    for (const auto& r : records)
        if (!flags.no_verify && !r->verified) {
            ++failed;
            err << "cell (" << r->decomposition.lambda.a << ',' << r->decomposition.mu.a
                << ") failed verification: " << r->failure << '\n';
        }

    if (flags.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(flags.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw DomainError("cannot open output file " + flags.out_path);
        file << body.str();
        if (!file) throw DomainError("failed writing " + flags.out_path);
        out << "wrote " << records.size() << " records to " << flags.out_path
            << (flags.no_verify ? " (unverified)" : failed ? "" : " (all verified)") << '\n';
    }
    return failed ? kVerificationFailed : kSuccess;
}

}  // namespace

DominantWeight parse_weight(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_int(text, text), 0};
    const std::string_view view(text);
    return {parse_int(view.substr(0, comma), text), parse_int(view.substr(comma + 1), text)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tensor products of simple quantum GL2 modules at a root of unity", "qgl2"};
    app.require_subcommand(1);

    QueryFlags decompose_flags;
    std::string format = "text";
    bool no_verify = false;
    auto* decompose = app.add_subcommand("decompose", "decompose L(a) (x) L(b) into twisted tilting summands");
    add_query_flags(*decompose, decompose_flags);
    decompose->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    decompose->add_flag("--no-verify", no_verify, "skip the character check");

    QueryFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "check a decomposition against the character product");
    add_query_flags(*verify, verify_flags);

    Int expand_a = 0, expand_ell = 0, expand_p = 0;
    auto* expand = app.add_subcommand("expand", "print the (ell,p) expansion of a");
    expand->add_option("--a", expand_a)->required();
    expand->add_option("--ell", expand_ell)->required();
    expand->add_option("--p", expand_p)->required();

    CharFlags char_flags;
    auto* character = app.add_subcommand("char", "print a simple, Weyl or tilting character");
    character->add_option("--simple", char_flags.simple, "simple module L(a) or L(a,b); needs --ell, --p");
    character->add_option("--weyl", char_flags.weyl, "Weyl character chi(a,b)");
    character->add_option("--tilting", char_flags.tilting, "special tilting module T(a,b); needs --modulus");
    character->add_option("--modulus", char_flags.modulus);
    character->add_option("--ell", char_flags.ell);
    character->add_option("--p", char_flags.p);

    TableFlags table_flags;
    auto* table = app.add_subcommand("table", "decompose every cell a >= b of a grid");
    table->add_option("--a-max", table_flags.a_max)->required();
    table->add_option("--b-max", table_flags.b_max)->required();
    table->add_option("--ell", table_flags.ell)->required();
    table->add_option("--p", table_flags.p)->required();
    table->add_option("--out", table_flags.out_path, "output file (stdout when omitted)");
    table->add_option("--format", table_flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--jobs", table_flags.jobs, "worker threads")->envname("QGL2_JOBS");
    table->add_flag("--no-verify", table_flags.no_verify, "skip the character check");

    try {
        std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(decompose_flags, format, !no_verify, out, err);
        if (verify->parsed()) return cmd_verify(verify_flags, out);
        if (expand->parsed()) return cmd_expand(expand_a, expand_ell, expand_p, out);
        if (character->parsed()) return cmd_char(char_flags, out);
        if (table->parsed()) return cmd_table(table_flags, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace qgl2::cli
