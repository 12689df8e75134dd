#pragma once

#include <vector>

#include "nnbvp/problems.hpp"
#include "nnbvp/sampling.hpp"

namespace nnbvp {

// Pointwise absolute error |psi_a - psi_t| over a point set.
struct ErrorField {
    std::vector<FieldSample> samples;  // value = e_abs at the sample point
    double max_abs = 0.0;
    GridSpec at_points;  // provenance of the evaluated set
};

ErrorField e_abs_field(const ProblemSpec& problem, const NetworkParams& params,
                       const PointSet& points);

// Relative error norm sqrt(sum (psi_a - psi_t)^2) / sqrt(sum psi_a^2).
// Sums run in point order so repeated evaluation is bitwise identical.
// Rejects point sets on which the analytic field is identically zero.
double e_norm(const ProblemSpec& problem, const NetworkParams& params, const PointSet& points);

}  // namespace nnbvp
