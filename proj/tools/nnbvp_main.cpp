// Command line front end: single solves plus the three error studies
// (training grid resolution, hidden node count, grid distribution), all
// emitting plot-ready CSV with an embedded replay manifest.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nnbvp/experiment.hpp"

namespace {

struct CommonOpts {
    std::string problem = "laplace-dirichlet";
    std::string grid = "uniform";
    int k = 16;
    int h = 15;
    std::string out_dir = ".";
    nnbvp::TrainConfig config;
    std::uint64_t grid_seed = 0;
    bool grid_seed_set = false;
    int jobs = 0;
};

void add_common_flags(CLI::App& cmd, CommonOpts& o) {
    cmd.add_option("--problem", o.problem, "BVP to solve")
        ->check(CLI::IsMember({"laplace-dirichlet", "poisson-mixed"}))
        ->capture_default_str();
    cmd.add_option("--k", o.k, "training grid resolution K (K^2 points)")->capture_default_str();
    cmd.add_option("--h", o.h, "hidden node count H")->capture_default_str();
    cmd.add_option("--epochs", o.config.epochs, "training epochs")->capture_default_str();
    cmd.add_option("--lr0", o.config.lr0, "initial learning rate")->capture_default_str();
    cmd.add_option("--anneal", o.config.anneal, "per-epoch learning rate decay factor")
        ->capture_default_str();
    cmd.add_option("--l2", o.config.l2, "L2 weight regularization coefficient")
        ->capture_default_str();
    cmd.add_option("--batch-size", o.config.batch_size, "SGD batch size")->capture_default_str();
    cmd.add_option("--seed", o.config.seed, "seed for parameter init and shuffling")
        ->capture_default_str();
    cmd.add_option("--eval-every", o.config.eval_every, "epochs between convergence snapshots")
        ->capture_default_str();
    cmd.add_option("--out-dir", o.out_dir, "output directory")->capture_default_str();
    cmd.add_option("--grid-seed", o.grid_seed, "seed for the random grid (defaults to --seed)")
        ->each([&o](const std::string&) { o.grid_seed_set = true; });
    cmd.add_option("--jobs", o.jobs, "max concurrent sweep rows (0 = hardware)")
        ->capture_default_str();
}

nnbvp::GridSpec make_grid(const CommonOpts& o) {
    nnbvp::GridSpec g;
    g.kind = nnbvp::grid_kind_from_name(o.grid);
    g.resolution = o.k;
    g.seed = o.grid_seed_set ? o.grid_seed : o.config.seed;
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neural-network solver for boundary value problems on the unit square"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* solve = app.add_subcommand("solve", "train once and write the solution field");
    add_common_flags(*solve, o);
    solve->add_option("--grid", o.grid, "training grid distribution")
        ->check(CLI::IsMember({"uniform", "boundary-dense", "interior-dense", "random"}))
        ->capture_default_str();

    std::vector<int> k_list{8, 16, 24, 30, 40};
    CLI::App* sweep_k = app.add_subcommand("sweep-k", "error vs training grid resolution");
    add_common_flags(*sweep_k, o);
    sweep_k->add_option("--k-list", k_list, "K values to sweep")->delimiter(',')->capture_default_str();
    sweep_k->add_option("--grid", o.grid, "training grid distribution")
        ->check(CLI::IsMember({"uniform", "boundary-dense", "interior-dense", "random"}))
        ->capture_default_str();

    std::vector<int> h_list{5, 10, 15, 25, 35, 45};
    CLI::App* sweep_h = app.add_subcommand("sweep-h", "error vs hidden node count");
    add_common_flags(*sweep_h, o);
    sweep_h->add_option("--h-list", h_list, "H values to sweep")->delimiter(',')->capture_default_str();
    sweep_h->add_option("--grid", o.grid, "training grid distribution")
        ->check(CLI::IsMember({"uniform", "boundary-dense", "interior-dense", "random"}))
        ->capture_default_str();

    int repeats = 1;
    CLI::App* sweep_grid = app.add_subcommand("sweep-grid", "error vs grid distribution");
    add_common_flags(*sweep_grid, o);
    sweep_grid->add_option("--repeats", repeats, "seeds to average per grid kind")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 2 on any usage error, 0 for --help
    }

    try {
        const nnbvp::ProblemSpec problem = nnbvp::problem_from_name(o.problem);
        if (solve->parsed()) {
            const auto res = nnbvp::run_solve(problem, make_grid(o), o.h, o.config, o.out_dir);
            std::printf("e_norm_test %s  max_e_abs %s\n",
                        nnbvp::format_double(res.e_norm_test).c_str(),
                        nnbvp::format_double(res.test_error.max_abs).c_str());
        } else if (sweep_k->parsed()) {
            const auto rows = nnbvp::run_sweep_k(problem, nnbvp::grid_kind_from_name(o.grid), k_list,
                                                 o.h, o.config, o.out_dir, o.jobs);
            for (const auto& r : rows)
                std::printf("k %d  e_norm_test %s\n", r.k, nnbvp::format_double(r.e_norm_test).c_str());
        } else if (sweep_h->parsed()) {
            const auto rows = nnbvp::run_sweep_h(problem, nnbvp::grid_kind_from_name(o.grid), o.k,
                                                 h_list, o.config, o.out_dir, o.jobs);
            for (const auto& r : rows)
                std::printf("h %d  e_norm_test %s\n", r.h, nnbvp::format_double(r.e_norm_test).c_str());
        } else if (sweep_grid->parsed()) {
            const std::uint64_t gseed = o.grid_seed_set ? o.grid_seed : o.config.seed;
            const auto rows = nnbvp::run_sweep_grid(problem, o.k, o.h, gseed, o.config, repeats,
                                                    o.out_dir, o.jobs);
            for (const auto& r : rows)
                std::printf("grid %s  e_norm_test %s\n", std::string(grid_kind_name(r.grid)).c_str(),
                            nnbvp::format_double(r.e_norm_test).c_str());
        }
    } catch (const nnbvp::TrainingDivergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
