#include "nnbvp/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace nnbvp {

ErrorField e_abs_field(const ProblemSpec& problem, const NetworkParams& params,
                       const PointSet& points) {
    if (points.points.empty()) throw std::invalid_argument("e_abs_field: empty point set");

    ErrorField field;
    field.at_points = points.spec;
    field.samples.reserve(points.size());
    for (const Point& x : points.points) {
        const double e = std::fabs(analytic_solution(problem, x) - trial_eval(problem, params, x));
        field.samples.push_back({x, e});
        if (e > field.max_abs) field.max_abs = e;
    }
    return field;
}

double e_norm(const ProblemSpec& problem, const NetworkParams& params, const PointSet& points) {
    if (points.points.empty()) throw std::invalid_argument("e_norm: empty point set");

    double num = 0.0;
    double den = 0.0;
    for (const Point& x : points.points) {
        const double a = analytic_solution(problem, x);
        const double d = a - trial_eval(problem, params, x);
        num += d * d;
        den += a * a;
    }
    if (den == 0.0)
        throw std::invalid_argument(
            "e_norm: analytic solution is identically zero on the point set; the relative "
            "norm is undefined");
    return std::sqrt(num) / std::sqrt(den);
}

}  // namespace nnbvp
