#include "nnbvp/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nnbvp/rng.hpp"

namespace nnbvp {

namespace {

constexpr double kPi = std::numbers::pi;

// 1-D coordinates for the structured kinds. The lower half is computed from
// the map and mirrored so the set is exactly symmetric under t -> 1 - t,
// with exact endpoints and midpoint.
std::vector<double> axis_coords(GridKind kind, int k) {
    std::vector<double> t(k);
    const double m = k - 1.0;
    for (int i = 0; i * 2 < k; ++i) {
        double v = 0.0;
        switch (kind) {
            case GridKind::Uniform:
                v = i / m;
                break;
            case GridKind::BoundaryDense:
                v = 0.5 * (1.0 - std::cos(kPi * i / m));
                break;
            case GridKind::InteriorDense:
                v = std::acos(1.0 - 2.0 * i / m) / kPi;
                break;
            case GridKind::Random:
                break;  // not axis-based
        }
        t[i] = v;
        t[k - 1 - i] = 1.0 - v;
    }
    if (k % 2 == 1) t[k / 2] = 0.5;
    return t;
}

}  // namespace

PointSet generate(const GridSpec& spec) {
    const int k = spec.resolution;
    if (k < 2) throw std::invalid_argument("grid resolution K must be at least 2, got " + std::to_string(k));

    PointSet set;
    set.spec = spec;
    set.points.reserve(static_cast<std::size_t>(k) * k);

    if (spec.kind == GridKind::Random) {
        std::mt19937_64 rng(spec.seed);
        for (int i = 0; i < k * k; ++i) {
            const double x1 = uniform_unit(rng);
            const double x2 = uniform_unit(rng);
            set.points.push_back(Point{x1, x2});
        }
        return set;
    }

    const std::vector<double> t = axis_coords(spec.kind, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) set.points.push_back(Point{t[i], t[j]});
    return set;
}

PointSet test_grid() {
    return generate(GridSpec{GridKind::Uniform, 21, 0});
}

GridKind grid_kind_from_name(std::string_view name) {
    if (name == "uniform") return GridKind::Uniform;
    if (name == "boundary-dense") return GridKind::BoundaryDense;
    if (name == "interior-dense") return GridKind::InteriorDense;
    if (name == "random") return GridKind::Random;
    throw std::invalid_argument("unknown grid kind: " + std::string(name));
}

std::string_view grid_kind_name(GridKind kind) {
    switch (kind) {
        case GridKind::Uniform: return "uniform";
        case GridKind::BoundaryDense: return "boundary-dense";
        case GridKind::InteriorDense: return "interior-dense";
        case GridKind::Random: return "random";
    }
    return "unknown";
}

}  // namespace nnbvp
