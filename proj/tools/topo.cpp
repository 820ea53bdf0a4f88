/**
 * topo — build spaces from expressions, compute exact homology, and
 * reproduce the library's verification battery as named checks.
 *
 * Exit codes: 0 success, 1 syntax/IO errors or failed checks,
 * 2 domain errors (NotFree, NonPrimeParameter, budget, ...).
 */

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "topo/topo.hpp"

namespace {

int exit_code_for(const topo::Error& e) {
    return (e.code() == "SyntaxError" || e.code() == "IoError") ? 1 : 2;
}

void print_error(const topo::Error& e) {
    std::cerr << topo::error_to_json(e).dump() << std::endl;
}

struct EvalOptions {
    std::string expression;
    bool homology = false;
    int up_to = -1;
    bool reduced = false;
    bool json = false;  // accepted for symmetry; JSON is the default
    bool csv = false;
    std::optional<int> dump_boundary;
    std::string save_path;
};

int run_eval(const EvalOptions& opt) {
    topo::SpaceExpression expr = topo::parse(opt.expression);
    topo::DeltaSet space = topo::evaluate(expr);

    if (!opt.save_path.empty()) topo::save_delta_set(space, opt.save_path);

    if (opt.dump_boundary) {
        std::cout << topo::boundary_matrix(space, *opt.dump_boundary).dump_triplets();
        return 0;
    }
    if (opt.csv) {
        for (int k = 0; k <= space.dimension(); ++k)
            std::cout << k << "," << space.count(k) << "\n";
        return 0;
    }

    topo::json out;
    if (opt.homology || opt.reduced) {
        topo::SpaceReport report = topo::space_report(expr.to_string(), opt.expression,
                                                      space, opt.up_to, opt.reduced);
        out = topo::to_json(report);
    } else {
        out = topo::json{{"name", expr.to_string()},
                         {"expression", opt.expression},
                         {"f_vector", topo::f_vector(space)},
                         {"euler", topo::euler_characteristic(space)}};
    }
    std::cout << out.dump(2) << std::endl;
    return 0;
}

struct CheckCliOptions {
    std::string filter;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::uint64_t seed = 20240101;
    bool list = false;
};

int run_check(const CheckCliOptions& opt) {
    if (opt.list) {
        for (const topo::Check& c : topo::paper_checks())
            std::cout << c.name << "  -  " << c.summary << "\n";
        return 0;
    }
    std::vector<topo::Check> selected = topo::paper_checks(opt.filter);
    if (selected.empty()) {
        std::cerr << "no check matches '" << opt.filter << "'" << std::endl;
        return 1;
    }
    topo::CheckOptions copts;
    copts.m = opt.m;
    copts.n = opt.n;
    copts.seed = opt.seed;

    bool all_pass = true;
    for (const topo::Check& c : selected) {
        auto start = std::chrono::steady_clock::now();
        topo::CheckOutcome outcome = c.run(copts);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        // results on stdout (byte-stable), timings on stderr
        if (outcome.pass)
            std::cout << "PASS " << c.name << " (" << outcome.detail << ")\n";
        else
            std::cout << "FAIL " << c.name << ": " << outcome.detail << "\n";
        std::cout.flush();
        std::cerr << c.name << ": " << secs << "s" << std::endl;
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology for finite semi-simplicial sets"};
    app.require_subcommand(1);

    std::size_t max_simplices = 1'000'000;
    if (const char* env = std::getenv("TOPO_MAX_SIMPLICES"))
        max_simplices = std::strtoull(env, nullptr, 10);
    app.add_option("--max-simplices", max_simplices,
                   "simplex budget for joins and other constructions");
    bool validate_flag = false;
    app.add_flag("--validate", validate_flag,
                 "validate every constructed Delta-set on the spot");

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a space expression");
    eval->add_option("expression", eval_opt.expression, "space expression")->required();
    eval->add_flag("--homology", eval_opt.homology, "include homology and connectivity");
    eval->add_option("--up-to", eval_opt.up_to, "highest homology degree to report");
    eval->add_flag("--reduced", eval_opt.reduced, "report reduced homology");
    eval->add_flag("--json", eval_opt.json, "JSON report (the default)");
    eval->add_flag("--csv", eval_opt.csv, "print the f-vector as CSV instead");
    eval->add_option("--dump-boundary", eval_opt.dump_boundary,
                     "print the boundary matrix of this degree as 'row col value' lines");
    eval->add_option("--save", eval_opt.save_path, "save the Delta-set as JSON");

    CheckCliOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "run named verification checks");
    check->add_option("filter", check_opt.filter, "run only checks whose name matches");
    check->add_option("--m", check_opt.m, "restrict parameterized checks to this modulus");
    check->add_option("--n", check_opt.n, "restrict parameterized checks to this level");
    check->add_option("--seed", check_opt.seed, "seed for the randomized batteries");
    check->add_flag("--list", check_opt.list, "list available checks");

    CLI11_PARSE(app, argc, argv);

    topo::simplex_budget() = max_simplices;
    topo::eager_validation() = validate_flag || check->parsed();

    try {
        if (eval->parsed()) return run_eval(eval_opt);
        if (check->parsed()) return run_check(check_opt);
    } catch (const topo::Error& e) {
        print_error(e);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << topo::json{{"error", {{"type", "Internal"}, {"message", e.what()}}}}.dump()
                  << std::endl;
        return 2;
    }
    return 0;
}
