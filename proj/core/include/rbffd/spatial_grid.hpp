#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rbffd/geometry.hpp"

namespace rbffd {

/// Uniform bucket grid over a square bounding box.
///
/// Supports incremental insertion (used by the fill) and exact k-nearest
/// queries (used for stencils). Points outside the box are clamped into the
/// border cells; queries remain exact.
class SpatialGrid {
public:
    SpatialGrid(Point lower, Point upper, double cell_size);

    /// Grid over `points` with cells sized so that each holds about `per_cell` points.
    static SpatialGrid for_points(std::span<const Point> points, double per_cell = 4.0);

    void insert(std::size_t index, const Point& p);

    /// True if some stored point lies strictly closer than `radius` to `p`.
    [[nodiscard]] bool any_within(const Point& p, double radius, std::span<const Point> points) const;

    /// Indices of the k points nearest to `p`, sorted by (distance, index).
    [[nodiscard]] std::vector<std::size_t> k_nearest(const Point& p, std::size_t k,
                                                     std::span<const Point> points) const;

    [[nodiscard]] std::size_t stored() const { return stored_; }

private:
    [[nodiscard]] int cell_x(double x) const;
    [[nodiscard]] int cell_y(double y) const;
    [[nodiscard]] const std::vector<std::size_t>& cell(int ix, int iy) const {
        return cells_[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx_) +
                      static_cast<std::size_t>(ix)];
    }

    Point lower_;
    double cell_size_;
    int nx_;
    int ny_;
    std::size_t stored_ = 0;
    std::vector<std::vector<std::size_t>> cells_;
};

}  // namespace rbffd
