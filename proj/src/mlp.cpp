#include "nnbvp/mlp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "nnbvp/rng.hpp"

namespace nnbvp {

namespace {

// b^e for small non-negative integer e, with 0^0 = 1.
double pow_int(double b, int e) {
    switch (e) {
        case 0: return 1.0;
        case 1: return b;
        case 2: return b * b;
        default: {
            double r = b * b * b;
            for (int k = 3; k < e; ++k) r *= b;
            return r;
        }
    }
}

void check_point(const NetworkParams& params, const Point& x) {
    if (x.dim() != static_cast<std::size_t>(params.input_dim))
        throw std::invalid_argument("point dimension " + std::to_string(x.dim()) +
                                    " does not match network input_dim " +
                                    std::to_string(params.input_dim));
}

void check_index(const NetworkParams& params, const MultiIndex& idx) {
    if (idx.dim() != static_cast<std::size_t>(params.input_dim))
        throw std::invalid_argument("multi-index length " + std::to_string(idx.dim()) +
                                    " does not match network input_dim " +
                                    std::to_string(params.input_dim));
    for (int o : idx.orders)
        if (o < 0) throw std::invalid_argument("multi-index orders must be non-negative");
    if (idx.total() > 3)
        throw std::invalid_argument("derivative order " + std::to_string(idx.total()) +
                                    " exceeds the supported maximum of 3");
}

}  // namespace

int MultiIndex::total() const {
    int t = 0;
    for (int o : orders) t += o;
    return t;
}

bool NetworkParams::all_finite() const {
    for (double v : w1)
        if (!std::isfinite(v)) return false;
    for (double v : b1)
        if (!std::isfinite(v)) return false;
    for (double v : w2)
        if (!std::isfinite(v)) return false;
    return true;
}

NetworkParams zeros_like(const NetworkParams& like) {
    NetworkParams g;
    g.h_count = like.h_count;
    g.input_dim = like.input_dim;
    g.w1.assign(like.w1.size(), 0.0);
    g.b1.assign(like.b1.size(), 0.0);
    g.w2.assign(like.w2.size(), 0.0);
    return g;
}

void axpy(double alpha, const NetworkParams& g, NetworkParams& acc) {
    for (std::size_t k = 0; k < acc.w1.size(); ++k) acc.w1[k] += alpha * g.w1[k];
    for (std::size_t k = 0; k < acc.b1.size(); ++k) acc.b1[k] += alpha * g.b1[k];
    for (std::size_t k = 0; k < acc.w2.size(); ++k) acc.w2[k] += alpha * g.w2[k];
}

NetworkParams init_params(int h_count, int input_dim, std::uint64_t seed) {
    if (h_count < 1) throw std::invalid_argument("h_count must be at least 1");
    if (input_dim < 1) throw std::invalid_argument("input_dim must be at least 1");

    NetworkParams p;
    p.h_count = h_count;
    p.input_dim = input_dim;
    p.w1.resize(static_cast<std::size_t>(h_count) * input_dim);
    p.b1.resize(h_count);
    p.w2.resize(h_count);

    std::mt19937_64 rng(seed);
    for (double& v : p.w1) v = uniform_in(rng, -0.5, 0.5);
    for (double& v : p.b1) v = uniform_in(rng, -0.5, 0.5);
    for (double& v : p.w2) v = uniform_in(rng, -0.5, 0.5);
    return p;
}

namespace detail {

double sigmoid_deriv(int order, double z) {
    const double s = 1.0 / (1.0 + std::exp(-z));
    if (order == 0) return s;
    const double s1 = s * (1.0 - s);
    switch (order) {
        case 1: return s1;
        case 2: return s1 * (1.0 - 2.0 * s);
        case 3: return s1 * (1.0 - 6.0 * s + 6.0 * s * s);
        case 4: return s1 * (1.0 - 14.0 * s + 36.0 * s * s - 24.0 * s * s * s);
        default:
            throw std::invalid_argument("sigmoid derivative order " + std::to_string(order) +
                                        " not supported");
    }
}

void EvalCache::rebuild(const NetworkParams& params, const Point& x) {
    const int H = params.h_count;
    const int n = params.input_dim;
    h.resize(H);
    sig.resize(static_cast<std::size_t>(H) * 5);
    for (int i = 0; i < H; ++i) {
        double hi = params.b1[i];
        for (int j = 0; j < n; ++j) hi += params.w1_at(i, j) * x[j];
        h[i] = hi;
        const double s = 1.0 / (1.0 + std::exp(-hi));
        const double s1 = s * (1.0 - s);
        double* row = &sig[static_cast<std::size_t>(i) * 5];
        row[0] = s;
        row[1] = s1;
        row[2] = s1 * (1.0 - 2.0 * s);
        row[3] = s1 * (1.0 - 6.0 * s + 6.0 * s * s);
        row[4] = s1 * (1.0 - 14.0 * s + 36.0 * s * s - 24.0 * s * s * s);
    }
}

double partial_cached(const NetworkParams& params, const MultiIndex& idx, const EvalCache& cache) {
    const int H = params.h_count;
    const int n = params.input_dim;
    const int lambda = idx.total();
    double acc = 0.0;
    for (int i = 0; i < H; ++i) {
        double p = 1.0;
        for (int j = 0; j < n; ++j) p *= pow_int(params.w1_at(i, j), idx.orders[j]);
        acc += params.w2[i] * p * cache.sig[static_cast<std::size_t>(i) * 5 + lambda];
    }
    return acc;
}

void add_scaled_param_gradient(const NetworkParams& params, const Point& x, const MultiIndex& idx,
                               const EvalCache& cache, double coeff, NetworkParams& acc) {
    const int H = params.h_count;
    const int n = params.input_dim;
    const int lambda = idx.total();
    for (int i = 0; i < H; ++i) {
        const double* row = &cache.sig[static_cast<std::size_t>(i) * 5];
        const double s_l = row[lambda];
        const double s_l1 = row[lambda + 1];
        double p = 1.0;
        for (int j = 0; j < n; ++j) p *= pow_int(params.w1_at(i, j), idx.orders[j]);

        acc.w2[i] += coeff * p * s_l;
        acc.b1[i] += coeff * params.w2[i] * p * s_l1;
        for (int k = 0; k < n; ++k) {
            // d/dw1[i,k] of prod_j w1[i,j]^l_j
            double dp = 0.0;
            if (idx.orders[k] > 0) {
                dp = idx.orders[k] * pow_int(params.w1_at(i, k), idx.orders[k] - 1);
                for (int j = 0; j < n; ++j)
                    if (j != k) dp *= pow_int(params.w1_at(i, j), idx.orders[j]);
            }
            acc.w1_at(i, k) += coeff * params.w2[i] * (dp * s_l + p * s_l1 * x[k]);
        }
    }
}

}  // namespace detail

double sigmoid_k(int order, double z) {
    if (order < 0 || order > 3)
        throw std::invalid_argument("sigmoid_k order must be in 0..3, got " + std::to_string(order));
    return detail::sigmoid_deriv(order, z);
}

double forward(const NetworkParams& params, const Point& x) {
    check_point(params, x);
    double acc = 0.0;
    for (int i = 0; i < params.h_count; ++i) {
        double hi = params.b1[i];
        for (int j = 0; j < params.input_dim; ++j) hi += params.w1_at(i, j) * x[j];
        acc += params.w2[i] / (1.0 + std::exp(-hi));
    }
    return acc;
}

double partial(const NetworkParams& params, const Point& x, const MultiIndex& idx) {
    check_point(params, x);
    check_index(params, idx);
    detail::EvalCache cache;
    cache.rebuild(params, x);
    return detail::partial_cached(params, idx, cache);
}

NetworkParams param_gradient(const NetworkParams& params, const Point& x, const MultiIndex& idx) {
    check_point(params, x);
    check_index(params, idx);
    detail::EvalCache cache;
    cache.rebuild(params, x);
    NetworkParams grad = zeros_like(params);
    detail::add_scaled_param_gradient(params, x, idx, cache, 1.0, grad);
    return grad;
}

}  // namespace nnbvp
