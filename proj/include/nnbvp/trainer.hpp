#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnbvp/problems.hpp"
#include "nnbvp/sampling.hpp"

namespace nnbvp {

// SGD hyperparameters. Learning rate at epoch e is lr0 * anneal^e.
struct TrainConfig {
    int epochs = 20000;
    double lr0 = 0.05;
    double anneal = 0.9995;   // per-epoch decay factor, in (0, 1]
    double l2 = 1e-6;         // weight regularization; biases excluded
    int batch_size = 32;
    std::uint64_t seed = 1;   // parameter init and per-epoch shuffling
    int eval_every = 100;     // epochs between convergence snapshots
};

// One convergence snapshot. pde_error_train is the mean squared residual
// over the training set (no regularization term).
struct ConvergenceRecord {
    int epoch = 0;
    double pde_error_train = 0.0;
    double e_norm_train = 0.0;
    double e_norm_test = 0.0;
};

struct TrainResult {
    NetworkParams params;
    std::vector<ConvergenceRecord> history;
    TrainConfig config;
    GridSpec grid;
};

// Thrown when a parameter or cost value stops being finite; training never
// clips silently, bad hyperparameters should surface loudly.
class TrainingDivergence : public std::runtime_error {
  public:
    TrainingDivergence(int epoch, const std::string& what)
        : std::runtime_error("training diverged at epoch " + std::to_string(epoch) + ": " + what),
          epoch_(epoch) {}

    int epoch() const { return epoch_; }

  private:
    int epoch_;
};

// Mean of residual^2 over the point set, plus l2 * (sum of squared weights,
// biases excluded).
double total_cost(const ProblemSpec& problem, const NetworkParams& params, const PointSet& points,
                  double l2);

// Gradient of total_cost restricted to the batch:
//   (2/|batch|) * sum r(x) * dr/dtheta  +  2*l2*theta   (weight entries only)
NetworkParams cost_gradient(const ProblemSpec& problem, const NetworkParams& params,
                            std::span<const Point> batch, double l2);

// Full SGD run: seeded init, per-epoch seeded shuffle, one full pass over
// the training set per epoch in batch_size chunks, annealed learning rate.
// Deterministic for fixed seeds. Snapshots at epoch 0, every eval_every
// epochs, and the final epoch.
TrainResult train(const ProblemSpec& problem, const GridSpec& grid, int h_count,
                  const TrainConfig& config);

}  // namespace nnbvp
