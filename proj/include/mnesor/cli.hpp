#ifndef MNESOR_CLI_HPP
#define MNESOR_CLI_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mnesor/checker.hpp"
#include "mnesor/query.hpp"
#include "mnesor/relalg.hpp"

namespace mnesor::cli {

// Exit codes. stdout carries only the result payload; diagnostics go to
// stderr.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 1;
inline constexpr int exit_resolution_error = 2;
inline constexpr int exit_data_error = 3;
inline constexpr int exit_axiom_fail = 4;
inline constexpr int exit_cap_exceeded = 5;

namespace detail {

inline bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto dots = text.find("..", 1); // a leading '-' is part of lo
    if (dots == std::string::npos) return false;
    auto l = mnesor::detail::parse_int(text.substr(0, dots));
    auto h = mnesor::detail::parse_int(text.substr(dots + 2));
    if (!l || !h || *l > *h) return false;
    lo = *l;
    hi = *h;
    return true;
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto part = s.substr(start, comma == std::string::npos ? std::string::npos
                                                               : comma - start);
        if (!part.empty()) out.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline int run_eval(const std::string& membership_path,
                    const std::vector<std::string>& table_specs,
                    const std::string& query_text, std::ostream& out,
                    std::ostream& err) {
    try {
        Relalg ra(MembershipEnv::load(membership_path));
        std::map<std::string, Table> tables;
        for (const auto& spec : table_specs) {
            auto eq = spec.find('=');
            if (eq == std::string::npos || eq == 0) {
                err << "error: --table expects name=path, got '" << spec << "'\n";
                return exit_parse_error;
            }
            tables[spec.substr(0, eq)] = ra.load(spec.substr(eq + 1));
        }
        QueryExpr q;
        try {
            q = parse_query(query_text);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return exit_parse_error;
        }
        try {
            out << table_to_csv(eval_query(q, ra, tables));
        } catch (const ResolutionError& e) {
            err << "error: " << e.what() << "\n";
            return exit_resolution_error;
        }
        return exit_ok;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return exit_data_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data_error;
    }
}

inline int run_axioms(const CheckPlan& plan, std::ostream& out, std::ostream& err) {
    try {
        auto report = run_check(plan);
        out << render(report);
        return report.all_pass() ? exit_ok : exit_axiom_fail;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return exit_cap_exceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_data_error;
    }
}

} // namespace detail

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"mnesor algebra: CSV queries via mnesor addition and granular "
                 "multiplication, plus exhaustive axiom checking"};
    app.require_subcommand(1);

    // eval
    std::string membership_path;
    std::vector<std::string> table_specs;
    std::string query_text;
    auto* eval = app.add_subcommand("eval", "evaluate a query over CSV tables");
    eval->add_option("-m,--membership", membership_path, "membership CSV path")
        ->required();
    eval->add_option("-t,--table", table_specs, "table binding name=path (repeatable)");
    eval->add_option("query", query_text, "query expression")->required();

    // axioms
    std::string model_name;
    std::size_t universe = 3;
    std::string range_text;
    bool exhaustive = false;
    unsigned long long random_cases = 0;
    unsigned long long seed = 0;
    std::string only_text;
    unsigned long long cap = 10'000'000;
    auto* axioms = app.add_subcommand("axioms", "check axioms over a built-in model");
    axioms->add_option("--model", model_name, "subset | minplus | extended-minplus | "
                                              "truncated-tropical | relation")
        ->required();
    axioms->add_option("--universe", universe, "universe size (subset/relation)");
    axioms->add_option("--range", range_text, "integer range lo..hi (integer models)");
    axioms->add_flag("--exhaustive", exhaustive, "enumerate every case (default)");
    axioms->add_option("--random", random_cases, "randomized mode with this many cases");
    axioms->add_option("--seed", seed, "seed for randomized mode");
    axioms->add_option("--only", only_text,
                       "comma-separated property labels or groups (bitrop, space)");
    axioms->add_option("--cap", cap, "maximum enumerated cases");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return exit_parse_error;
    }

    if (app.got_subcommand(eval))
        return detail::run_eval(membership_path, table_specs, query_text, out, err);

    CheckPlan plan;
    if (model_name == "subset")
        plan.model = ModelKind::Subset;
    else if (model_name == "minplus")
        plan.model = ModelKind::MinPlus;
    else if (model_name == "extended-minplus")
        plan.model = ModelKind::ExtendedMinPlus;
    else if (model_name == "truncated-tropical")
        plan.model = ModelKind::TruncatedTropical;
    else if (model_name == "relation")
        plan.model = ModelKind::Relation;
    else {
        err << "error: unknown model '" << model_name << "'\n";
        return exit_parse_error;
    }
    plan.universe = universe;
    if (!range_text.empty() && !detail::parse_range(range_text, plan.lo, plan.hi)) {
        err << "error: --range expects lo..hi, got '" << range_text << "'\n";
        return exit_parse_error;
    }
    if (plan.model == ModelKind::TruncatedTropical && !range_text.empty() && plan.hi != 0) {
        err << "error: truncated-tropical range must end at 0\n";
        return exit_parse_error;
    }
    plan.exhaustive = random_cases == 0;
    plan.random_cases = random_cases;
    plan.seed = seed;
    plan.only = detail::split_commas(only_text);
    plan.cap = cap;
    return detail::run_axioms(plan, out, err);
}

} // namespace mnesor::cli

#endif
