#pragma once

#include <cstdint>
#include <vector>

namespace nnbvp {

// Input point x = (x1, ..., xn). Coordinates live on the closed unit
// square for the shipped problems, but evaluation itself does not care.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t j) const { return coords[j]; }
};

// Per-input derivative orders (lambda_1, ..., lambda_n). Selects which
// mixed partial of the network output to evaluate.
struct MultiIndex {
    std::vector<int> orders;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> o) : orders(o) {}
    explicit MultiIndex(std::vector<int> o) : orders(std::move(o)) {}

    int total() const;
    std::size_t dim() const { return orders.size(); }
};

// Weights and biases of the one-hidden-layer network
//   N(x) = sum_i w2[i] * sigmoid(w1[i,:] . x + b1[i])
// The output layer carries no bias. Doubles throughout; second and third
// input derivatives amplify rounding too much in single precision.
//
// Also reused as the gradient record type: a gradient with respect to the
// parameters has exactly this shape.
struct NetworkParams {
    std::vector<double> w1;  // h_count x input_dim, row-major
    std::vector<double> b1;  // h_count
    std::vector<double> w2;  // h_count
    int h_count = 0;
    int input_dim = 0;

    double w1_at(int i, int j) const { return w1[static_cast<std::size_t>(i) * input_dim + j]; }
    double& w1_at(int i, int j) { return w1[static_cast<std::size_t>(i) * input_dim + j]; }

    bool all_finite() const;
    std::size_t parameter_count() const { return w1.size() + b1.size() + w2.size(); }
};

// Zero-valued gradient record with the same shape as `like`.
NetworkParams zeros_like(const NetworkParams& like);

// acc += alpha * g, entrywise over w1, b1, w2.
void axpy(double alpha, const NetworkParams& g, NetworkParams& acc);

// Entries i.i.d. uniform in [-0.5, 0.5], deterministic per seed. Small
// symmetric values keep the hidden pre-activations inside the sigmoid's
// responsive range on the unit square.
NetworkParams init_params(int h_count, int input_dim, std::uint64_t seed);

// order-th derivative of the logistic sigmoid at z, order in 0..3.
double sigmoid_k(int order, double z);

double forward(const NetworkParams& params, const Point& x);

// Mixed partial d^lambda N / dx1^l1 ... dxn^ln for idx = (l1, ..., ln),
// total order at most 3:
//   sum_i w2[i] * (prod_j w1[i,j]^l_j) * sigmoid^(lambda)(h_i)
double partial(const NetworkParams& params, const Point& x, const MultiIndex& idx);

// d/dtheta [ partial(params, x, idx) ] for every parameter theta.
NetworkParams param_gradient(const NetworkParams& params, const Point& x, const MultiIndex& idx);

namespace detail {

// Derivatives of the logistic sigmoid up to order 4. Order 4 exists only
// for parameter gradients of third-order partials and is not part of the
// public surface.
double sigmoid_deriv(int order, double z);

// Pre-activations h_i and sigmoid derivative values 0..4 at h_i for one
// input point, shared by every partial/gradient evaluated at that point.
// Nothing is cached across points.
struct EvalCache {
    std::vector<double> h;    // h_count
    std::vector<double> sig;  // h_count x 5, row-major: sig[i*5 + order]

    void rebuild(const NetworkParams& params, const Point& x);
};

double partial_cached(const NetworkParams& params, const MultiIndex& idx, const EvalCache& cache);

// acc += coeff * d/dtheta [ d^idx N(x) ], reusing the point's cache.
void add_scaled_param_gradient(const NetworkParams& params, const Point& x, const MultiIndex& idx,
                               const EvalCache& cache, double coeff, NetworkParams& acc);

}  // namespace detail

}  // namespace nnbvp
