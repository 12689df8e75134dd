#include "nnbvp/trainer.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "nnbvp/evaluation.hpp"
#include "nnbvp/rng.hpp"

namespace nnbvp {

namespace {

void check_config(const TrainConfig& c) {
    if (c.epochs < 0) throw std::invalid_argument("epochs must be non-negative");
    if (!(c.lr0 > 0.0)) throw std::invalid_argument("lr0 must be positive");
    if (!(c.anneal > 0.0 && c.anneal <= 1.0)) throw std::invalid_argument("anneal must be in (0, 1]");
    if (c.l2 < 0.0) throw std::invalid_argument("l2 must be non-negative");
    if (c.batch_size < 1) throw std::invalid_argument("batch_size must be at least 1");
    if (c.eval_every < 1) throw std::invalid_argument("eval_every must be at least 1");
}

ConvergenceRecord snapshot(const ProblemSpec& problem, const NetworkParams& params,
                           const PointSet& train_points, const PointSet& test_points, int epoch) {
    ConvergenceRecord rec;
    rec.epoch = epoch;
    rec.pde_error_train = total_cost(problem, params, train_points, 0.0);
    rec.e_norm_train = e_norm(problem, params, train_points);
    rec.e_norm_test = e_norm(problem, params, test_points);
    if (!std::isfinite(rec.pde_error_train) || !std::isfinite(rec.e_norm_train) ||
        !std::isfinite(rec.e_norm_test))
        throw TrainingDivergence(epoch, "non-finite cost or error metric");
    return rec;
}

}  // namespace

double total_cost(const ProblemSpec& problem, const NetworkParams& params, const PointSet& points,
                  double l2) {
    if (points.points.empty()) throw std::invalid_argument("total_cost: empty point set");

    double sum = 0.0;
    for (const Point& x : points.points) {
        const double r = residual(problem, params, x);
        sum += r * r;
    }
    double cost = sum / static_cast<double>(points.size());
    if (l2 != 0.0) {
        double w2sum = 0.0;
        for (double v : params.w1) w2sum += v * v;
        for (double v : params.w2) w2sum += v * v;
        cost += l2 * w2sum;
    }
    return cost;
}

NetworkParams cost_gradient(const ProblemSpec& problem, const NetworkParams& params,
                            std::span<const Point> batch, double l2) {
    if (batch.empty()) throw std::invalid_argument("cost_gradient: empty batch");

    NetworkParams grad = zeros_like(params);
    const double scale = 2.0 / static_cast<double>(batch.size());
    for (const Point& x : batch) {
        const double r = residual(problem, params, x);
        add_scaled_residual_param_gradient(problem, params, x, scale * r, grad);
    }
    if (l2 != 0.0) {
        for (std::size_t k = 0; k < grad.w1.size(); ++k) grad.w1[k] += 2.0 * l2 * params.w1[k];
        for (std::size_t k = 0; k < grad.w2.size(); ++k) grad.w2[k] += 2.0 * l2 * params.w2[k];
    }
    return grad;
}

TrainResult train(const ProblemSpec& problem, const GridSpec& grid, int h_count,
                  const TrainConfig& config) {
    check_config(config);

    const PointSet train_points = generate(grid);
    const PointSet test_points = test_grid();
    const std::size_t m = train_points.size();

    TrainResult result;
    result.config = config;
    result.grid = grid;
    result.params = init_params(h_count, 2, config.seed);
    result.history.push_back(snapshot(problem, result.params, train_points, test_points, 0));

    std::mt19937_64 shuffle_rng(config.seed + 0x9E3779B97F4A7C15ULL);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<Point> batch;
    batch.reserve(config.batch_size);

    double lr = config.lr0;
    for (int e = 0; e < config.epochs; ++e) {
        shuffle(order, shuffle_rng);
        for (std::size_t start = 0; start < m; start += config.batch_size) {
            const std::size_t stop = std::min(m, start + config.batch_size);
            batch.clear();
            for (std::size_t k = start; k < stop; ++k) batch.push_back(train_points.points[order[k]]);
            const NetworkParams grad = cost_gradient(problem, result.params, batch, config.l2);
            axpy(-lr, grad, result.params);
        }
        lr *= config.anneal;

        const int epoch = e + 1;
        if (!result.params.all_finite())
            throw TrainingDivergence(epoch, "non-finite network parameter");
        if (epoch % config.eval_every == 0 || epoch == config.epochs)
            result.history.push_back(snapshot(problem, result.params, train_points, test_points, epoch));
    }
    return result;
}

}  // namespace nnbvp
