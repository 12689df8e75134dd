#include "nnbvp/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nnbvp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(const Point& x) {
    if (x.dim() != 2) throw std::invalid_argument("problems are two-dimensional");
    for (double c : x.coords)
        if (!(c >= 0.0 && c <= 1.0))
            throw std::invalid_argument("point lies outside the closed unit square");
}

void check_params(const NetworkParams& params) {
    if (params.input_dim != 2)
        throw std::invalid_argument("network input_dim must be 2 for the shipped problems");
}

// Multi-indices used by the Poisson trial at the projected point (x1, 1).
const MultiIndex kIdx00{0, 0};
const MultiIndex kIdx10{1, 0};
const MultiIndex kIdx01{0, 1};
const MultiIndex kIdx20{2, 0};
const MultiIndex kIdx02{0, 2};
const MultiIndex kIdx11{1, 1};
const MultiIndex kIdx21{2, 1};

struct LaplaceTerms {
    double n, n1, n2, n11, n22;
};

LaplaceTerms laplace_terms(const NetworkParams& params, const Point& x) {
    detail::EvalCache cache;
    cache.rebuild(params, x);
    return {detail::partial_cached(params, kIdx00, cache),
            detail::partial_cached(params, kIdx10, cache),
            detail::partial_cached(params, kIdx01, cache),
            detail::partial_cached(params, kIdx20, cache),
            detail::partial_cached(params, kIdx02, cache)};
}

// Network terms entering the Poisson trial: values at x and at the
// projection xb = (x1, 1), where B(x1) = N(xb) + dN/dx2(xb) pins the
// Neumann edge.
struct PoissonTerms {
    double n, n1, n2, n11, n22;  // at x
    double b, b1, b11;           // B and its x1-derivatives at (x1, 1)
};

PoissonTerms poisson_terms(const NetworkParams& params, const Point& x) {
    detail::EvalCache cache;
    cache.rebuild(params, x);
    PoissonTerms t;
    t.n = detail::partial_cached(params, kIdx00, cache);
    t.n1 = detail::partial_cached(params, kIdx10, cache);
    t.n2 = detail::partial_cached(params, kIdx01, cache);
    t.n11 = detail::partial_cached(params, kIdx20, cache);
    t.n22 = detail::partial_cached(params, kIdx02, cache);

    const Point xb{x[0], 1.0};
    cache.rebuild(params, xb);
    t.b = detail::partial_cached(params, kIdx00, cache) + detail::partial_cached(params, kIdx01, cache);
    t.b1 = detail::partial_cached(params, kIdx10, cache) + detail::partial_cached(params, kIdx11, cache);
    t.b11 = detail::partial_cached(params, kIdx20, cache) + detail::partial_cached(params, kIdx21, cache);
    return t;
}

}  // namespace

ProblemSpec problem_from_name(std::string_view name) {
    if (name == "laplace-dirichlet") return ProblemSpec{ProblemKind::LaplaceDirichlet};
    if (name == "poisson-mixed") return ProblemSpec{ProblemKind::PoissonMixed};
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

std::string_view problem_name(const ProblemSpec& problem) {
    switch (problem.kind) {
        case ProblemKind::LaplaceDirichlet: return "laplace-dirichlet";
        case ProblemKind::PoissonMixed: return "poisson-mixed";
    }
    return "unknown";
}

double analytic_solution(const ProblemSpec& problem, const Point& x) {
    check_domain(x);
    const double x1 = x[0], x2 = x[1];
    if (problem.kind == ProblemKind::LaplaceDirichlet)
        return std::sin(kPi * x1) * (std::exp(kPi * x2) - std::exp(-kPi * x2)) /
               (std::exp(kPi) - std::exp(-kPi));
    return x2 * x2 * std::sin(kPi * x1);
}

double source_term(const ProblemSpec& problem, const Point& x) {
    check_domain(x);
    if (problem.kind == ProblemKind::LaplaceDirichlet) return 0.0;
    const double x1 = x[0], x2 = x[1];
    return (2.0 - kPi * kPi * x2 * x2) * std::sin(kPi * x1);
}

double trial_eval(const ProblemSpec& problem, const NetworkParams& params, const Point& x) {
    check_params(params);
    if (x.dim() != 2) throw std::invalid_argument("trial solutions are two-dimensional");
    const double x1 = x[0], x2 = x[1];
    const double s = std::sin(kPi * x1);

    if (problem.kind == ProblemKind::LaplaceDirichlet) {
        const double n = forward(params, x);
        return x2 * s + x1 * (1.0 - x1) * x2 * (1.0 - x2) * n;
    }

    const double n = forward(params, x);
    const Point xb{x1, 1.0};
    const double b = forward(params, xb) + partial(params, xb, kIdx01);
    return 2.0 * x2 * s + x1 * (1.0 - x1) * x2 * (n - b);
}

TrialDerivatives trial_gradient_and_laplacian(const ProblemSpec& problem,
                                              const NetworkParams& params, const Point& x) {
    check_params(params);
    if (x.dim() != 2) throw std::invalid_argument("trial solutions are two-dimensional");
    const double x1 = x[0], x2 = x[1];
    const double s = std::sin(kPi * x1);
    const double c = std::cos(kPi * x1);
    const double f = x1 * (1.0 - x1);   // vanishes on x1 = 0, 1
    const double fp = 1.0 - 2.0 * x1;

    TrialDerivatives out;
    if (problem.kind == ProblemKind::LaplaceDirichlet) {
        const double g = x2 * (1.0 - x2);  // vanishes on x2 = 0, 1
        const double gp = 1.0 - 2.0 * x2;
        const LaplaceTerms t = laplace_terms(params, x);

        out.grad[0] = kPi * x2 * c + g * (fp * t.n + f * t.n1);
        out.grad[1] = s + f * (gp * t.n + g * t.n2);
        out.laplacian = -kPi * kPi * x2 * s +
                        g * (f * t.n11 + 2.0 * fp * t.n1 - 2.0 * t.n) +
                        f * (g * t.n22 + 2.0 * gp * t.n2 - 2.0 * t.n);
        return out;
    }

    const PoissonTerms t = poisson_terms(params, x);
    const double m = t.n - t.b;      // N(x) - B(x1)
    const double m1 = t.n1 - t.b1;
    const double m11 = t.n11 - t.b11;

    out.grad[0] = 2.0 * kPi * x2 * c + x2 * (fp * m + f * m1);
    out.grad[1] = 2.0 * s + f * (m + x2 * t.n2);
    out.laplacian = -2.0 * kPi * kPi * x2 * s +
                    x2 * (f * m11 + 2.0 * fp * m1 - 2.0 * m) +
                    f * (2.0 * t.n2 + x2 * t.n22);
    return out;
}

double residual(const ProblemSpec& problem, const NetworkParams& params, const Point& x) {
    return trial_gradient_and_laplacian(problem, params, x).laplacian - source_term(problem, x);
}

void add_scaled_residual_param_gradient(const ProblemSpec& problem, const NetworkParams& params,
                                        const Point& x, double coeff, NetworkParams& acc) {
    check_params(params);
    const double x1 = x[0], x2 = x[1];
    const double f = x1 * (1.0 - x1);
    const double fp = 1.0 - 2.0 * x1;

    detail::EvalCache cache;
    cache.rebuild(params, x);

    if (problem.kind == ProblemKind::LaplaceDirichlet) {
        const double g = x2 * (1.0 - x2);
        const double gp = 1.0 - 2.0 * x2;
        detail::add_scaled_param_gradient(params, x, kIdx20, cache, coeff * g * f, acc);
        detail::add_scaled_param_gradient(params, x, kIdx02, cache, coeff * f * g, acc);
        detail::add_scaled_param_gradient(params, x, kIdx10, cache, coeff * 2.0 * g * fp, acc);
        detail::add_scaled_param_gradient(params, x, kIdx01, cache, coeff * 2.0 * f * gp, acc);
        detail::add_scaled_param_gradient(params, x, kIdx00, cache, coeff * (-2.0 * g - 2.0 * f), acc);
        return;
    }

    // terms at x
    detail::add_scaled_param_gradient(params, x, kIdx20, cache, coeff * x2 * f, acc);
    detail::add_scaled_param_gradient(params, x, kIdx10, cache, coeff * 2.0 * x2 * fp, acc);
    detail::add_scaled_param_gradient(params, x, kIdx00, cache, coeff * -2.0 * x2, acc);
    detail::add_scaled_param_gradient(params, x, kIdx01, cache, coeff * 2.0 * f, acc);
    detail::add_scaled_param_gradient(params, x, kIdx02, cache, coeff * x2 * f, acc);

    // terms at the projection (x1, 1), entering through -B(x1)
    const Point xb{x1, 1.0};
    cache.rebuild(params, xb);
    detail::add_scaled_param_gradient(params, xb, kIdx20, cache, coeff * -x2 * f, acc);
    detail::add_scaled_param_gradient(params, xb, kIdx21, cache, coeff * -x2 * f, acc);
    detail::add_scaled_param_gradient(params, xb, kIdx10, cache, coeff * -2.0 * x2 * fp, acc);
    detail::add_scaled_param_gradient(params, xb, kIdx11, cache, coeff * -2.0 * x2 * fp, acc);
    detail::add_scaled_param_gradient(params, xb, kIdx00, cache, coeff * 2.0 * x2, acc);
    detail::add_scaled_param_gradient(params, xb, kIdx01, cache, coeff * 2.0 * x2, acc);
}

NetworkParams residual_param_gradient(const ProblemSpec& problem, const NetworkParams& params,
                                      const Point& x) {
    NetworkParams grad = zeros_like(params);
    add_scaled_residual_param_gradient(problem, params, x, 1.0, grad);
    return grad;
}

}  // namespace nnbvp
