#include "nnbvp/experiment.hpp"

#include <charconv>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <thread>

#include <json.hpp>

namespace nnbvp {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json grid_to_json(const GridSpec& grid) {
    ordered_json j;
    j["kind"] = std::string(grid_kind_name(grid.kind));
    j["k"] = grid.resolution;
    if (grid.kind == GridKind::Random) {
        j["seed"] = grid.seed;
        j["rng"] = "mt19937_64";
    } else {
        j["includes_boundary"] = true;
    }
    return j;
}

ordered_json config_to_json(const TrainConfig& c) {
    ordered_json j;
    j["epochs"] = c.epochs;
    j["lr0"] = c.lr0;
    j["anneal"] = c.anneal;
    j["l2"] = c.l2;
    j["batch_size"] = c.batch_size;
    j["seed"] = c.seed;
    j["eval_every"] = c.eval_every;
    return j;
}

ordered_json manifest_json(const ExperimentManifest& m) {
    ordered_json j;
    j["command"] = m.command;
    j["problem"] = m.problem;
    j["grid"] = grid_to_json(m.grid);
    j["h_count"] = m.h_count;
    j["train_config"] = config_to_json(m.train_config);
    if (!m.k_list.empty()) j["k_list"] = m.k_list;
    if (!m.h_list.empty()) j["h_list"] = m.h_list;
    if (m.repeats != 1) j["repeats"] = m.repeats;
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    return j;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

void write_manifest_file(const ExperimentManifest& m, const std::filesystem::path& out_dir) {
    auto out = open_output(out_dir / "manifest.json");
    out << manifest_json(m).dump(2) << '\n';
}

// CSV layout: one '#'-prefixed manifest comment line, a header row, then
// data rows. Comma separated, '.' decimal point.
std::ofstream open_csv(const std::filesystem::path& path, const ExperimentManifest& m,
                       std::string_view header) {
    auto out = open_output(path);
    out << "# " << manifest_json(m).dump() << '\n';
    out << header << '\n';
    return out;
}

ExperimentManifest make_manifest(std::string command, const ProblemSpec& problem,
                                 const GridSpec& grid, int h_count, const TrainConfig& config) {
    ExperimentManifest m;
    m.command = std::move(command);
    m.problem = std::string(problem_name(problem));
    m.grid = grid;
    m.h_count = h_count;
    m.train_config = config;
    m.timestamp = utc_timestamp();
    return m;
}

void write_solution_csv(const std::filesystem::path& path, const ExperimentManifest& m,
                        const ProblemSpec& problem, const NetworkParams& params) {
    auto out = open_csv(path, m, "x1,x2,psi_t,psi_a,e_abs");
    const PointSet grid = test_grid();
    for (const Point& x : grid.points) {
        const double t = trial_eval(problem, params, x);
        const double a = analytic_solution(problem, x);
        out << format_double(x[0]) << ',' << format_double(x[1]) << ',' << format_double(t) << ','
            << format_double(a) << ',' << format_double(std::fabs(a - t)) << '\n';
    }
}

void write_convergence_csv(const std::filesystem::path& path, const ExperimentManifest& m,
                           const std::vector<ConvergenceRecord>& history) {
    auto out = open_csv(path, m, "epoch,pde_error_train,e_norm_train,e_norm_test");
    for (const ConvergenceRecord& rec : history)
        out << rec.epoch << ',' << format_double(rec.pde_error_train) << ','
            << format_double(rec.e_norm_train) << ',' << format_double(rec.e_norm_test) << '\n';
}

// Runs row tasks on up to `jobs` threads; row order in the result is fixed
// regardless of scheduling, and each row is internally deterministic.
std::vector<SweepRow> run_rows(const std::vector<std::function<SweepRow()>>& tasks, int jobs) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    std::vector<SweepRow> rows(tasks.size());
    std::size_t next = 0;
    while (next < tasks.size()) {
        const std::size_t stop = std::min(tasks.size(), next + static_cast<std::size_t>(jobs));
        std::vector<std::future<SweepRow>> running;
        for (std::size_t i = next; i < stop; ++i)
            running.push_back(std::async(std::launch::async, tasks[i]));
        for (std::size_t i = next; i < stop; ++i) rows[i] = running[i - next].get();
        next = stop;
    }
    return rows;
}

SweepRow averaged_row(const ProblemSpec& problem, const GridSpec& grid, int h_count,
                      const TrainConfig& config, int repeats) {
    SweepRow row;
    row.k = grid.resolution;
    row.h = h_count;
    row.grid = grid.kind;
    for (int rep = 0; rep < repeats; ++rep) {
        TrainConfig c = config;
        c.seed = config.seed + static_cast<std::uint64_t>(rep);
        GridSpec g = grid;
        g.seed = grid.seed + static_cast<std::uint64_t>(rep);
        const TrainResult res = train(problem, g, h_count, c);
        const ConvergenceRecord& last = res.history.back();
        row.m_train = static_cast<std::size_t>(g.resolution) * g.resolution;
        row.e_norm_test += last.e_norm_test;
        row.pde_error_train += last.pde_error_train;
    }
    row.e_norm_test /= repeats;
    row.pde_error_train /= repeats;
    return row;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string manifest_to_json(const ExperimentManifest& manifest) {
    return manifest_json(manifest).dump();
}

SolveResult run_solve(const ProblemSpec& problem, const GridSpec& grid, int h_count,
                      const TrainConfig& config, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const ExperimentManifest m = make_manifest("solve", problem, grid, h_count, config);

    SolveResult result;
    result.train = train(problem, grid, h_count, config);
    result.test_error = e_abs_field(problem, result.train.params, test_grid());
    result.e_norm_test = result.train.history.back().e_norm_test;

    write_solution_csv(out_dir / "solution.csv", m, problem, result.train.params);
    write_convergence_csv(out_dir / "convergence.csv", m, result.train.history);
    write_manifest_file(m, out_dir);
    return result;
}

std::vector<SweepRow> run_sweep_k(const ProblemSpec& problem, GridKind grid_kind,
                                  const std::vector<int>& k_list, int h_count,
                                  const TrainConfig& config, const std::filesystem::path& out_dir,
                                  int jobs) {
    if (k_list.empty()) throw std::invalid_argument("sweep-k: empty K list");
    std::filesystem::create_directories(out_dir);

    std::vector<std::function<SweepRow()>> tasks;
    for (int k : k_list)
        tasks.push_back([=]() {
            return averaged_row(problem, GridSpec{grid_kind, k, config.seed}, h_count, config, 1);
        });
    const std::vector<SweepRow> rows = run_rows(tasks, jobs);

    ExperimentManifest m =
        make_manifest("sweep-k", problem, GridSpec{grid_kind, k_list.front(), config.seed}, h_count, config);
    m.k_list = k_list;
    auto out = open_csv(out_dir / "sweep_k.csv", m, "k,m_train,e_norm_test,pde_error_train");
    for (const SweepRow& r : rows)
        out << r.k << ',' << r.m_train << ',' << format_double(r.e_norm_test) << ','
            << format_double(r.pde_error_train) << '\n';
    write_manifest_file(m, out_dir);
    return rows;
}

std::vector<SweepRow> run_sweep_h(const ProblemSpec& problem, GridKind grid_kind, int k,
                                  const std::vector<int>& h_list, const TrainConfig& config,
                                  const std::filesystem::path& out_dir, int jobs) {
    if (h_list.empty()) throw std::invalid_argument("sweep-h: empty H list");
    std::filesystem::create_directories(out_dir);

    std::vector<std::function<SweepRow()>> tasks;
    for (int h : h_list)
        tasks.push_back([=]() {
            return averaged_row(problem, GridSpec{grid_kind, k, config.seed}, h, config, 1);
        });
    const std::vector<SweepRow> rows = run_rows(tasks, jobs);

    ExperimentManifest m =
        make_manifest("sweep-h", problem, GridSpec{grid_kind, k, config.seed}, h_list.front(), config);
    m.h_list = h_list;
    auto out = open_csv(out_dir / "sweep_h.csv", m, "h,e_norm_test,pde_error_train");
    for (const SweepRow& r : rows)
        out << r.h << ',' << format_double(r.e_norm_test) << ',' << format_double(r.pde_error_train)
            << '\n';
    write_manifest_file(m, out_dir);
    return rows;
}

std::vector<SweepRow> run_sweep_grid(const ProblemSpec& problem, int k, int h_count,
                                     std::uint64_t grid_seed, const TrainConfig& config,
                                     int repeats, const std::filesystem::path& out_dir, int jobs) {
    if (repeats < 1) throw std::invalid_argument("sweep-grid: repeats must be at least 1");
    std::filesystem::create_directories(out_dir);

    const GridKind kinds[] = {GridKind::Uniform, GridKind::BoundaryDense, GridKind::InteriorDense,
                              GridKind::Random};
    std::vector<std::function<SweepRow()>> tasks;
    for (GridKind kind : kinds)
        tasks.push_back([=]() {
            return averaged_row(problem, GridSpec{kind, k, grid_seed}, h_count, config, repeats);
        });
    const std::vector<SweepRow> rows = run_rows(tasks, jobs);

    ExperimentManifest m =
        make_manifest("sweep-grid", problem, GridSpec{GridKind::Uniform, k, grid_seed}, h_count, config);
    m.repeats = repeats;
    auto out = open_csv(out_dir / "sweep_grid.csv", m, "grid,repeats,e_norm_test,pde_error_train");
    for (const SweepRow& r : rows)
        out << grid_kind_name(r.grid) << ',' << repeats << ',' << format_double(r.e_norm_test) << ','
            << format_double(r.pde_error_train) << '\n';
    write_manifest_file(m, out_dir);
    return rows;
}

}  // namespace nnbvp
