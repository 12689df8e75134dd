#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nnbvp/mlp.hpp"

namespace nnbvp {

enum class GridKind { Uniform, BoundaryDense, InteriorDense, Random };

// Recipe for a training point set of exactly K^2 points on the unit square.
struct GridSpec {
    GridKind kind = GridKind::Uniform;
    int resolution = 16;      // K
    std::uint64_t seed = 0;   // used only by Random
};

struct PointSet {
    std::vector<Point> points;
    GridSpec spec;

    std::size_t size() const { return points.size(); }
};

// Uniform:       tensor product of K equispaced coordinates incl. 0 and 1.
// BoundaryDense: tensor product of cosine-clustered coordinates
//                t_i = (1 - cos(pi*i/(K-1)))/2, dense near the edges.
// InteriorDense: tensor product of the inverse map
//                u_i = acos(1 - 2*i/(K-1))/pi, dense near 0.5.
// Random:        K^2 i.i.d. points, coordinates uniform on [0,1],
//                deterministic per seed (mt19937_64).
PointSet generate(const GridSpec& spec);

// Fixed uniform 21x21 evaluation grid, 441 points, boundary included.
PointSet test_grid();

GridKind grid_kind_from_name(std::string_view name);
std::string_view grid_kind_name(GridKind kind);

}  // namespace nnbvp
