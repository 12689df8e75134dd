#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nnbvp/evaluation.hpp"
#include "nnbvp/trainer.hpp"

namespace nnbvp {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Everything needed to replay a run. Serialized as JSON into manifest.json
// and embedded as a '#'-prefixed comment line at the top of every CSV.
struct ExperimentManifest {
    std::string command;
    std::string problem;
    GridSpec grid;
    int h_count = 15;
    TrainConfig train_config;
    std::string tool_version{kToolVersion};
    std::string timestamp;

    // sweep parameters, echoed when applicable
    std::vector<int> k_list;
    std::vector<int> h_list;
    int repeats = 1;
};

std::string manifest_to_json(const ExperimentManifest& manifest);

// Shortest round-trip decimal form; bitwise-stable output across runs.
std::string format_double(double v);

std::string utc_timestamp();

struct SolveResult {
    TrainResult train;
    ErrorField test_error;
    double e_norm_test = 0.0;
};

// Trains once and writes solution.csv (21x21 test-grid fields),
// convergence.csv and manifest.json into out_dir.
SolveResult run_solve(const ProblemSpec& problem, const GridSpec& grid, int h_count,
                      const TrainConfig& config, const std::filesystem::path& out_dir);

struct SweepRow {
    int k = 0;
    int h = 0;
    GridKind grid = GridKind::Uniform;
    std::size_t m_train = 0;
    double e_norm_test = 0.0;
    double pde_error_train = 0.0;
};

// One row per K in k_list, all rows sharing h_count and config (same init
// seed, so rows differ only in the swept variable). Writes sweep_k.csv and
// manifest.json. Rows are trained concurrently up to `jobs` threads.
std::vector<SweepRow> run_sweep_k(const ProblemSpec& problem, GridKind grid_kind,
                                  const std::vector<int>& k_list, int h_count,
                                  const TrainConfig& config, const std::filesystem::path& out_dir,
                                  int jobs = 0);

// One row per H in h_list at fixed K.
std::vector<SweepRow> run_sweep_h(const ProblemSpec& problem, GridKind grid_kind, int k,
                                  const std::vector<int>& h_list, const TrainConfig& config,
                                  const std::filesystem::path& out_dir, int jobs = 0);

// One row per grid kind (uniform, boundary-dense, interior-dense, random)
// at fixed K and H. With repeats > 1 each row's errors are averaged over
// runs with seeds seed, seed+1, ..., seed+repeats-1 (the random grid is
// redrawn per repeat as well).
std::vector<SweepRow> run_sweep_grid(const ProblemSpec& problem, int k, int h_count,
                                     std::uint64_t grid_seed, const TrainConfig& config,
                                     int repeats, const std::filesystem::path& out_dir,
                                     int jobs = 0);

}  // namespace nnbvp
