#pragma once

#include <array>
#include <string_view>

#include "nnbvp/mlp.hpp"

namespace nnbvp {

// The two shipped boundary value problems on the unit square [0,1]x[0,1].
//
// LaplaceDirichlet:  laplacian(psi) = 0
//   psi = 0 on x1=0, x1=1, x2=0;  psi = sin(pi*x1) on x2=1
//   trial: psi_t = x2*sin(pi*x1) + x1(1-x1)x2(1-x2) * N(x)
//
// PoissonMixed:      laplacian(psi) = (2 - pi^2*x2^2) * sin(pi*x1)
//   psi = 0 on x1=0, x1=1, x2=0;  dpsi/dx2 = 2*sin(pi*x1) on x2=1
//   trial: psi_t = 2*x2*sin(pi*x1)
//          + x1(1-x1)x2 * [N(x1,x2) - N(x1,1) - dN/dx2(x1,1)]
//
// Both trial solutions satisfy their boundary conditions identically for
// any parameter values, so training is unconstrained residual minimization.
enum class ProblemKind { LaplaceDirichlet, PoissonMixed };

struct ProblemSpec {
    ProblemKind kind = ProblemKind::LaplaceDirichlet;

    int input_dim() const { return 2; }
};

struct FieldSample {
    Point point;
    double value = 0.0;
};

ProblemSpec problem_from_name(std::string_view name);
std::string_view problem_name(const ProblemSpec& problem);

// Closed-form reference solution; rejects points outside the closed square.
double analytic_solution(const ProblemSpec& problem, const Point& x);

// PDE right-hand side f with laplacian(psi) = f; zero for Laplace.
double source_term(const ProblemSpec& problem, const Point& x);

// Trial solution value at x.
double trial_eval(const ProblemSpec& problem, const NetworkParams& params, const Point& x);

struct TrialDerivatives {
    std::array<double, 2> grad{};
    double laplacian = 0.0;
};

// First derivatives and Laplacian of the trial solution, assembled in
// closed form from the network's mixed partials by the product rule.
TrialDerivatives trial_gradient_and_laplacian(const ProblemSpec& problem,
                                              const NetworkParams& params, const Point& x);

// PDE residual r(x) = laplacian(psi_t)(x) - f(x).
double residual(const ProblemSpec& problem, const NetworkParams& params, const Point& x);

// dr(x)/dtheta for every network parameter theta.
NetworkParams residual_param_gradient(const ProblemSpec& problem, const NetworkParams& params,
                                      const Point& x);

// acc += coeff * dr(x)/dtheta. Shared by residual_param_gradient and the
// trainer's batch accumulation.
void add_scaled_residual_param_gradient(const ProblemSpec& problem, const NetworkParams& params,
                                        const Point& x, double coeff, NetworkParams& acc);

}  // namespace nnbvp
