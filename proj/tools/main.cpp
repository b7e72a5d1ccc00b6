// Command line front end: build | count | recurse | ratios | entropy | verify.
// Exit codes: 0 success, 1 check/consistency failure, 2 usage error,
// 3 resource/precision/budget limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <dimercount/asymptotics.hpp>
#include <dimercount/errors.hpp>
#include <dimercount/graphs.hpp>
#include <dimercount/oracle.hpp>
#include <dimercount/recursion.hpp>
#include <dimercount/verify.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dc = dimercount;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string family = "hanoi";
    int n = 0;
    int k = 0;
    int digits = 0;
    unsigned precision_bits = 0;
    std::string format = "text";
    std::uint64_t oracle_steps = dc::OracleBudget{}.max_steps;
    double oracle_seconds = dc::OracleBudget{}.max_seconds;
    int exact_cap = dc::kDefaultExactCap;
    int build_cap = dc::kDefaultBuildCap;
    bool parallel = false;
    bool with_sierpx2 = false;
    std::string input;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// Text-mode readability for long expansions: space every 10 fractional
// digits, leaving short values untouched.
std::string group_digits(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos || s.size() - dot - 1 <= 20) return s;
    std::string out = s.substr(0, dot + 1);
    size_t count = 0;
    for (size_t i = dot + 1; i < s.size(); ++i, ++count) {
        if (count && count % 10 == 0) out += ' ';
        out += s[i];
    }
    return out;
}

dc::OracleBudget budget_of(const RunConfig& cfg) {
    return {cfg.oracle_steps, cfg.oracle_seconds};
}

int cmd_build(const RunConfig& cfg) {
    const dc::GraphInstance g = dc::build(dc::parse_family(cfg.family), cfg.n, cfg.build_cap);
    if (cfg.format == "json")
        emit(g.to_json());
    else
        std::cout << g.to_edge_list();
    return 0;
}

int cmd_count(const RunConfig& cfg) {
    dc::GraphInstance g;
    if (!cfg.input.empty()) {
        if (cfg.input == "-") {
            g = dc::parse_edge_list(std::cin);
        } else {
            std::ifstream in(cfg.input);
            if (!in) throw dc::DomainError("cannot open input file: " + cfg.input);
            g = dc::parse_edge_list(in);
        }
    } else {
        g = dc::build(dc::parse_family(cfg.family), cfg.n, cfg.build_cap);
    }
    const dc::BoundaryCountResult r = dc::count_by_boundary(g, budget_of(cfg), cfg.parallel);
    if (cfg.format == "json") {
        ordered_json j;
        j["family"] = dc::family_name(g.family);
        j["stage"] = g.stage;
        j["x"] = r.counts.x.str();
        j["y"] = r.counts.y.str();
        j["z"] = r.counts.z.str();
        j["w"] = r.counts.w.str();
        j["m"] = r.counts.total().str();
        j["elapsed"] = r.seconds;
        j["steps"] = r.steps;
        emit(j);
    } else {
        std::cout << dc::family_name(g.family) << " n=" << g.stage << "\n"
                  << "x = " << r.counts.x.str() << "\n"
                  << "y = " << r.counts.y.str() << "\n"
                  << "z = " << r.counts.z.str() << "\n"
                  << "w = " << r.counts.w.str() << "\n"
                  << "m = " << r.counts.total().str() << "\n"
                  << "steps = " << r.steps << ", elapsed = " << r.seconds << " s\n";
    }
    return 0;
}

int cmd_recurse(const RunConfig& cfg) {
    const auto family = dc::parse_family(cfg.family);
    const auto ledger = dc::iterate(family, cfg.n, cfg.exact_cap);
    if (cfg.format == "csv") {
        std::cout << dc::stage_records_to_csv(ledger);
    } else if (cfg.format == "json") {
        ordered_json j;
        j["family"] = dc::family_name(family);
        auto rows = ordered_json::array();
        for (const auto& r : ledger) {
            ordered_json row;
            row["n"] = r.n;
            row["x"] = r.counts.x.str();
            row["y"] = r.counts.y.str();
            row["z"] = r.counts.z.str();
            row["w"] = r.counts.w.str();
            row["S"] = r.aggregates.S.str();
            row["R"] = r.aggregates.R.str();
            row["T"] = r.aggregates.T.str();
            row["P"] = r.aggregates.P.str();
            row["m"] = r.m.str();
            rows.push_back(std::move(row));
        }
        j["stages"] = std::move(rows);
        emit(j);
    } else {
        for (const auto& r : ledger)
            std::cout << "n=" << r.n << "  x=" << r.counts.x.str() << "  y=" << r.counts.y.str()
                      << "  z=" << r.counts.z.str() << "  w=" << r.counts.w.str()
                      << "  m=" << r.m.str() << "\n";
    }
    return 0;
}

int cmd_ratios(const RunConfig& cfg) {
    const auto family = dc::parse_family(cfg.family);
    const unsigned bits = cfg.precision_bits ? cfg.precision_bits : dc::default_precision_bits();
    const int n_max = std::max(cfg.n, 1);
    const auto ledger = dc::iterate(family, n_max, cfg.exact_cap);
    const unsigned out_digits = dc::bits_to_digits10(bits);

    dc::ScopedPrecision guard(bits);
    ordered_json rows = ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
        const dc::RatioState s = dc::ratios_from_counts(ledger.at(static_cast<size_t>(n)), bits);
        ordered_json row;
        row["n"] = n;
        row["alpha"] = s.alpha.str(out_digits);
        row["beta"] = s.beta.str(out_digits);
        row["gamma"] = s.gamma.str(out_digits);
        row["epsilon"] = s.epsilon.str(out_digits);
        rows.push_back(std::move(row));
    }

    ordered_json j;
    j["family"] = dc::family_name(family);
    j["precisionBits"] = bits;
    j["stages"] = std::move(rows);
    if (cfg.digits > 0) {
        const dc::FixedPointResult fp = dc::ratio_fixed_point(family, cfg.digits);
        dc::ScopedPrecision guard2(fp.precisionBits);
        ordered_json lim;
        lim["value"] = dc::truncated_decimals(fp.value, cfg.digits);
        lim["radius"] = fp.radius.str(3);
        lim["stage"] = fp.stage;
        lim["precisionBits"] = fp.precisionBits;
        j["limit"] = std::move(lim);
    }

    if (cfg.format == "json") {
        emit(j);
    } else if (cfg.format == "csv") {
        std::cout << "n,alpha,beta,gamma,epsilon\n";
        for (const auto& row : j["stages"])
            std::cout << row["n"] << ',' << row["alpha"].get<std::string>() << ','
                      << row["beta"].get<std::string>() << ',' << row["gamma"].get<std::string>()
                      << ',' << row["epsilon"].get<std::string>() << "\n";
    } else {
        for (const auto& row : j["stages"])
            std::cout << "n=" << row["n"] << "  alpha=" << row["alpha"].get<std::string>()
                      << "  beta=" << row["beta"].get<std::string>()
                      << "  gamma=" << row["gamma"].get<std::string>() << "\n";
        if (j.contains("limit"))
            std::cout << "limit = " << j["limit"]["value"].get<std::string>() << " (stage "
                      << j["limit"]["stage"] << ", radius " << j["limit"]["radius"].get<std::string>()
                      << ")\n";
    }
    return 0;
}

int cmd_entropy(const RunConfig& cfg) {
    const auto family = dc::parse_family(cfg.family);
    if (cfg.k > 0) {
        // bounds anchored at a fixed stage, no smallest-k search
        const auto ledger = dc::iterate(family, cfg.k, cfg.exact_cap);
        dc::EntropyBounds b;
        if (cfg.precision_bits) {
            b = dc::entropy_bounds(family, cfg.k, ledger, cfg.precision_bits);
        } else {
            unsigned bits = dc::default_precision_bits();
            for (;; bits *= 2) {
                try {
                    b = dc::entropy_bounds(family, cfg.k, ledger, bits);
                    break;
                } catch (const dc::PrecisionError&) {
                    if (bits * 2 > dc::kMaxPrecisionBits) throw;
                }
            }
        }
        dc::ScopedPrecision guard(b.precisionBits);
        const int digits = std::min(b.agreedDigits + 8,
                                    static_cast<int>(dc::bits_to_digits10(b.precisionBits)) - 8);
        if (cfg.format == "json") {
            ordered_json j;
            j["family"] = dc::family_name(family);
            j["k"] = b.k;
            j["lower"] = dc::truncated_decimals(b.lower, digits);
            j["upper"] = dc::truncated_decimals(b.upper, digits);
            j["agreedDigits"] = b.agreedDigits;
            j["precisionBits"] = b.precisionBits;
            emit(j);
        } else {
            std::cout << "bounds for mu_v(" << dc::family_name(family) << ") at k=" << b.k
                      << " (" << b.precisionBits << " bits):\n"
                      << "  lower = " << group_digits(dc::truncated_decimals(b.lower, digits))
                      << "\n"
                      << "  upper = " << group_digits(dc::truncated_decimals(b.upper, digits))
                      << "\n"
                      << "  agreed digits = " << b.agreedDigits << "\n";
        }
        return 0;
    }
    if (cfg.digits <= 0) throw dc::DomainError("entropy needs --digits or --k");
    const dc::EntropyEstimate e = dc::entropy(family, cfg.digits, cfg.precision_bits);
    dc::ScopedPrecision guard(e.precisionBits);
    const int bound_digits = std::min(cfg.digits + 10, dc::kMaxEntropyDigits + 10);
    if (cfg.format == "json") {
        ordered_json j;
        j["family"] = dc::family_name(family);
        j["digits"] = e.digits;
        j["muPerVertex"] = e.digitsString;
        j["muPerEdge"] = dc::truncated_decimals(e.muPerEdge, cfg.digits);
        j["k"] = e.k;
        j["precisionBits"] = e.precisionBits;
        j["lower"] = dc::truncated_decimals(e.bounds.lower, bound_digits);
        j["upper"] = dc::truncated_decimals(e.bounds.upper, bound_digits);
        j["agreedDigits"] = e.bounds.agreedDigits;
        emit(j);
    } else {
        std::cout << "mu_v(" << dc::family_name(family) << ") = " << group_digits(e.digitsString)
                  << "  ("
                  << e.digits << " digits, k=" << e.k << ", " << e.precisionBits << " bits)\n"
                  << "mu_e = " << group_digits(dc::truncated_decimals(e.muPerEdge, cfg.digits))
                  << "\n"
                  << "bounds agree to " << e.bounds.agreedDigits << " digits:\n"
                  << "  lower = "
                  << group_digits(dc::truncated_decimals(e.bounds.lower, bound_digits)) << "\n"
                  << "  upper = "
                  << group_digits(dc::truncated_decimals(e.bounds.upper, bound_digits)) << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, bool family_given) {
    dc::VerifyOptions opt;
    if (family_given) opt.family = dc::parse_family(cfg.family);
    opt.exact_cap = cfg.exact_cap;
    opt.oracle_budget = budget_of(cfg);
    opt.oracle_parallel = cfg.parallel;
    opt.oracle_sierpx2 = cfg.with_sierpx2;
    const dc::VerifyReport report = dc::run_verify(opt);
    if (cfg.format == "json")
        emit(dc::to_json(report));
    else
        std::cout << dc::render_text(report);
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimer-monomer (matching) counts and entropy constants for the "
                 "hanoi and sierpx self-similar graph families"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto family_check = CLI::IsMember({"hanoi", "sierpx"});

    auto* build_cmd = app.add_subcommand("build", "construct an explicit graph instance");
    build_cmd->add_option("--family", cfg.family, "graph family")->required()->check(family_check);
    build_cmd->add_option("--n", cfg.n, "stage index")->required();
    build_cmd->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    build_cmd->add_option("--build-cap", cfg.build_cap, "explicit construction cap");

    auto* count_cmd = app.add_subcommand("count", "brute-force matching counts (oracle)");
    count_cmd->add_option("--family", cfg.family, "graph family")->check(family_check);
    count_cmd->add_option("--n", cfg.n, "stage index");
    count_cmd->add_option("--input", cfg.input, "edge-list file ('-' for stdin)");
    count_cmd->add_option("--format", cfg.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    count_cmd->add_option("--oracle-steps", cfg.oracle_steps, "step budget");
    count_cmd->add_option("--oracle-seconds", cfg.oracle_seconds, "wall-clock budget");
    count_cmd->add_option("--build-cap", cfg.build_cap, "explicit construction cap");
    count_cmd->add_flag("--parallel", cfg.parallel, "count the corner classes in parallel");

    auto* recurse_cmd = app.add_subcommand("recurse", "exact stage ledger via the recursions");
    recurse_cmd->add_option("--family", cfg.family, "graph family")->required()->check(family_check);
    recurse_cmd->add_option("--n", cfg.n, "last stage")->required();
    recurse_cmd->add_option("--format", cfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    recurse_cmd->add_option("--exact-cap", cfg.exact_cap, "exact iteration cap");

    auto* ratios_cmd = app.add_subcommand("ratios", "successive-count ratios per stage");
    ratios_cmd->add_option("--family", cfg.family, "graph family")->required()->check(family_check);
    ratios_cmd->add_option("--n", cfg.n, "last stage")->required();
    ratios_cmd->add_option("--digits", cfg.digits, "also enclose the common limit to this many digits");
    ratios_cmd->add_option("--precision-bits", cfg.precision_bits, "working precision");
    ratios_cmd->add_option("--exact-cap", cfg.exact_cap, "exact iteration cap");
    ratios_cmd->add_option("--format", cfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* entropy_cmd = app.add_subcommand("entropy", "entropy per site via rigorous bounds");
    entropy_cmd->add_option("--family", cfg.family, "graph family")->required()->check(family_check);
    entropy_cmd->add_option("--digits", cfg.digits, "certified digits");
    entropy_cmd->add_option("--k", cfg.k, "report the bounds anchored at this stage instead");
    entropy_cmd->add_option("--precision-bits", cfg.precision_bits, "starting precision");
    entropy_cmd->add_option("--exact-cap", cfg.exact_cap, "exact iteration cap");
    entropy_cmd->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the golden-value and invariant suite");
    auto* verify_family =
        verify_cmd->add_option("--family", cfg.family, "restrict to one family")->check(family_check);
    verify_cmd->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--exact-cap", cfg.exact_cap, "ledger depth for invariant checks");
    verify_cmd->add_option("--oracle-steps", cfg.oracle_steps, "oracle step budget");
    verify_cmd->add_option("--oracle-seconds", cfg.oracle_seconds, "oracle wall-clock budget");
    verify_cmd->add_flag("--parallel", cfg.parallel, "parallel oracle counting");
    verify_cmd->add_flag("--with-sierpx2", cfg.with_sierpx2,
                         "also brute-force the sierpx n=2 total count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build_cmd->parsed()) return cmd_build(cfg);
        if (count_cmd->parsed()) {
            if (cfg.input.empty() && count_cmd->count("--family") == 0)
                throw dc::DomainError("count needs --family/--n or --input");
            if (count_cmd->count("--format") == 0) cfg.format = "json";
            return cmd_count(cfg);
        }
        if (recurse_cmd->parsed()) return cmd_recurse(cfg);
        if (ratios_cmd->parsed()) return cmd_ratios(cfg);
        if (entropy_cmd->parsed()) return cmd_entropy(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg, verify_family->count() > 0);
    } catch (const dc::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dc::PrecisionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dc::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dc::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dc::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
