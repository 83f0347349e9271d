// Command-line front end for average mixing matrix computations.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "amix/cli.hpp"

namespace {

void add_graph(CLI::App* sub, amix::cli::RunConfig& cfg)
{
    sub->add_option("--graph", cfg.graph,
                    "path:n | complete:n | bipartite:m,n | cycle:n | file:PATH | product:(SPEC)x(SPEC)")
        ->required();
}

void add_dist(CLI::App* sub, amix::cli::RunConfig& cfg, bool required)
{
    auto* opt = sub->add_option("--dist", cfg.dist, "distribution as JSON");
    if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"amix: average mixing matrices of continuous-time quantum walks"};
    app.require_subcommand(1);
    app.fallthrough();

    amix::cli::RunConfig cfg;
    std::string format;
    std::string output;
    app.add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--output,-o", output, "write the report here instead of stdout");

    auto* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues, multiplicities, idempotent traces");
    add_graph(spectrum, cfg);

    auto* amm = app.add_subcommand("amm", "average mixing matrix (classical, or under --dist)");
    add_graph(amm, cfg);
    add_dist(amm, cfg, false);

    auto* mixing = app.add_subcommand("mixing", "mixing matrix M(t)");
    add_graph(mixing, cfg);
    mixing->add_option("--time", cfg.time, "time t")->required();

    auto* feasible = app.add_subcommand("check-feasible", "trace bounds required for uniform average mixing");
    add_graph(feasible, cfg);

    auto* solve = app.add_subcommand("solve-uniform", "find a distribution with uniform average mixing");
    add_graph(solve, cfg);
    solve->add_option("--family", cfg.family, "dirac_instantaneous | gaussian | bernoulli | cosine_product");

    auto* verify = app.add_subcommand("verify-uniform", "check M_R = J/n");
    add_graph(verify, cfg);
    add_dist(verify, cfg, true);
    verify->add_option("--tol", cfg.tol, "max-entry tolerance (default $AMIX_TOL or 1e-9)");

    auto* mc = app.add_subcommand("monte-carlo", "empirical average of sampled mixing matrices");
    add_graph(mc, cfg);
    add_dist(mc, cfg, true);
    mc->add_option("--count", cfg.count, "number of samples");
    mc->add_option("--seed", cfg.seed, "random seed");

    auto* cart = app.add_subcommand("cartesian-check", "trace identity on the Cartesian product");
    add_graph(cart, cfg);
    cart->add_option("--graph2", cfg.graph2, "second factor")->required();
    add_dist(cart, cfg, true);
    cart->add_option("--count", cfg.count, "samples when the covariance is estimated");
    cart->add_option("--seed", cfg.seed, "random seed");

    auto* avg = app.add_subcommand("avg-state", "average state of a vertex state");
    add_graph(avg, cfg);
    add_dist(avg, cfg, false);
    avg->add_option("--vertex", cfg.vertex, "vertex index")->required();

    auto* gram = app.add_subcommand("gram", "Gram matrix of average vertex states");
    add_graph(gram, cfg);
    gram->add_option("--dist1", cfg.dist1, "first distribution")->required();
    gram->add_option("--dist2", cfg.dist2, "second distribution")->required();
    gram->add_option("--tol", cfg.tol, "entrywise tolerance (default 1e-10)");

    auto* choi = app.add_subcommand("choi-check", "positivity of the Choi matrix of the average-state map");
    add_graph(choi, cfg);
    add_dist(choi, cfg, false);

    app.add_subcommand("paper-suite", "run the acceptance catalog and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : amix::cli::kExitInputError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (format == "json") cfg.format = amix::cli::Format::json;
    if (format == "csv") cfg.format = amix::cli::Format::csv;
    if (format == "table") cfg.format = amix::cli::Format::table;

    const auto result = amix::cli::run(cfg);
    if (!result.error.empty()) {
        std::cerr << "amix: " << result.error << '\n';
        return result.exit_code;
    }
    if (output.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "amix: cannot write " << output << '\n';
            return amix::cli::kExitInputError;
        }
        out << result.text;
    }
    return result.exit_code;
}
