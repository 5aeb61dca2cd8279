#include "rbffd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rbffd/errors.hpp"
#include "rbffd/spatial_grid.hpp"

namespace rbffd {

namespace {

void check_spacing(double h) {
    if (!(h > 0.0 && h < 2.0)) {
        throw InvalidSpacing("spacing h must satisfy 0 < h < 2, got " + std::to_string(h));
    }
}

// SplitMix64 finalizer; the fill draws the value for counter c as mix(key + c * gamma),
// so every draw is addressable without generator state.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

class CounterRandom {
public:
    explicit CounterRandom(std::int64_t seed)
        : key_(mix64(static_cast<std::uint64_t>(seed) ^ 0x6a09e667f3bcc909ULL)) {}

    /// Uniform double in [0, 1) for the given counter.
    [[nodiscard]] double uniform(std::uint64_t counter) const {
        const std::uint64_t bits = mix64(key_ + counter * 0x9e3779b97f4a7c15ULL);
        return static_cast<double>(bits >> 11U) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

}  // namespace

std::size_t NodeSet::boundary_count() const {
    return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), NodeKind::Boundary));
}

std::vector<std::size_t> NodeSet::interior_indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (!is_boundary(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<Point> discretize_boundary(double h) {
    check_spacing(h);
    const auto count = static_cast<std::size_t>(std::lround(2.0 * std::numbers::pi / h));
    std::vector<Point> points;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        points.push_back({std::cos(angle), std::sin(angle)});
    }
    return points;
}

NodeSet fill_interior(std::span<const Point> boundary, double h, std::int64_t seed,
                      const FillOptions& options) {
    check_spacing(h);
    if (boundary.empty()) {
        throw InsufficientNodes("fill_interior: boundary is empty");
    }

    NodeSet nodes;
    nodes.h = h;
    nodes.seed = seed;
    nodes.positions.assign(boundary.begin(), boundary.end());
    nodes.kinds.assign(boundary.size(), NodeKind::Boundary);

    SpatialGrid grid({-1.0, -1.0}, {1.0, 1.0}, h);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        grid.insert(i, nodes.positions[i]);
    }

    const CounterRandom random(seed);
    const double max_radius = 1.0 - 0.5 * h;
    const double min_gap = h * (1.0 - options.separation_slack);
    const int candidates = options.candidates_per_node;

    // The positions vector doubles as the FIFO queue: every accepted node is
    // appended and later expanded in turn.
    for (std::size_t cursor = 0; cursor < nodes.size(); ++cursor) {
        const Point center = nodes.positions[cursor];
        const double offset = random.uniform(cursor);
        for (int k = 0; k < candidates; ++k) {
            const double angle =
                2.0 * std::numbers::pi * (offset + static_cast<double>(k) / candidates);
            const Point candidate{center.x + h * std::cos(angle), center.y + h * std::sin(angle)};
            if (!(candidate.norm() < max_radius)) {
                continue;
            }
            if (grid.any_within(candidate, min_gap, nodes.positions)) {
                continue;
            }
            grid.insert(nodes.size(), candidate);
            nodes.positions.push_back(candidate);
            nodes.kinds.push_back(NodeKind::Interior);
        }
    }
    return nodes;
}

NodeSet discretize_disc(double h, std::int64_t seed) {
    const auto boundary = discretize_boundary(h);
    return fill_interior(boundary, h, seed);
}

std::vector<Stencil> build_stencils(const NodeSet& nodes, std::size_t n) {
    if (n == 0 || n > nodes.size()) {
        throw InsufficientNodes("build_stencils: stencil size " + std::to_string(n) +
                                " needs 1 <= n <= N = " + std::to_string(nodes.size()));
    }
    const auto grid = SpatialGrid::for_points(nodes.positions);
    std::vector<Stencil> stencils;
    stencils.reserve(nodes.interior_count());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes.is_boundary(i)) {
            continue;
        }
        stencils.push_back({i, grid.k_nearest(nodes.positions[i], n, nodes.positions)});
    }
    return stencils;
}

}  // namespace rbffd
