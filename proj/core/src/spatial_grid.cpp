#include "rbffd/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "rbffd/errors.hpp"

namespace rbffd {

SpatialGrid::SpatialGrid(Point lower, Point upper, double cell_size)
    : lower_(lower), cell_size_(cell_size) {
    if (!(cell_size > 0.0) || !(upper.x >= lower.x) || !(upper.y >= lower.y)) {
        throw Error("SpatialGrid: invalid extent or cell size");
    }
    nx_ = std::max(1, static_cast<int>(std::ceil((upper.x - lower.x) / cell_size)));
    ny_ = std::max(1, static_cast<int>(std::ceil((upper.y - lower.y) / cell_size)));
    cells_.resize(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
}

SpatialGrid SpatialGrid::for_points(std::span<const Point> points, double per_cell) {
    Point lo{0.0, 0.0};
    Point hi{0.0, 0.0};
    if (!points.empty()) {
        lo = hi = points.front();
        for (const auto& p : points) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
    }
    const double width = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
    const double n = std::max<double>(1.0, static_cast<double>(points.size()));
    const double cell = width * std::sqrt(per_cell / n);
    SpatialGrid grid(lo, {lo.x + width, lo.y + width}, cell);
    for (std::size_t i = 0; i < points.size(); ++i) {
        grid.insert(i, points[i]);
    }
    return grid;
}

int SpatialGrid::cell_x(double x) const {
    const int ix = static_cast<int>(std::floor((x - lower_.x) / cell_size_));
    return std::clamp(ix, 0, nx_ - 1);
}

int SpatialGrid::cell_y(double y) const {
    const int iy = static_cast<int>(std::floor((y - lower_.y) / cell_size_));
    return std::clamp(iy, 0, ny_ - 1);
}

void SpatialGrid::insert(std::size_t index, const Point& p) {
    cells_[static_cast<std::size_t>(cell_y(p.y)) * static_cast<std::size_t>(nx_) +
           static_cast<std::size_t>(cell_x(p.x))]
        .push_back(index);
    ++stored_;
}

bool SpatialGrid::any_within(const Point& p, double radius, std::span<const Point> points) const {
    const double r2 = radius * radius;
    const int x0 = cell_x(p.x - radius);
    const int x1 = cell_x(p.x + radius);
    const int y0 = cell_y(p.y - radius);
    const int y1 = cell_y(p.y + radius);
    for (int iy = y0; iy <= y1; ++iy) {
        for (int ix = x0; ix <= x1; ++ix) {
            for (const std::size_t j : cell(ix, iy)) {
                if (squared_distance(p, points[j]) < r2) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::vector<std::size_t> SpatialGrid::k_nearest(const Point& p, std::size_t k,
                                                std::span<const Point> points) const {
    using Entry = std::pair<double, std::size_t>;
    std::vector<Entry> found;
    if (k == 0) {
        return {};
    }
    const int qx = cell_x(p.x);
    const int qy = cell_y(p.y);
    constexpr double inf = std::numeric_limits<double>::infinity();

    for (int ring = 0;; ++ring) {
        const int x0 = qx - ring;
        const int x1 = qx + ring;
        const int y0 = qy - ring;
        const int y1 = qy + ring;
        for (int iy = std::max(y0, 0); iy <= std::min(y1, ny_ - 1); ++iy) {
            const bool edge_row = (iy == y0 || iy == y1);
            for (int ix = std::max(x0, 0); ix <= std::min(x1, nx_ - 1); ++ix) {
                if (!edge_row && ix != x0 && ix != x1) {
                    continue;  // interior of the square was visited by earlier rings
                }
                for (const std::size_t j : cell(ix, iy)) {
                    found.emplace_back(squared_distance(p, points[j]), j);
                }
            }
        }

        const bool covers_all = x0 <= 0 && y0 <= 0 && x1 >= nx_ - 1 && y1 >= ny_ - 1;
        if (found.size() >= k) {
            std::nth_element(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(k - 1),
                             found.end());
            // Distance from p to the nearest cell not yet visited.
            const double left = x0 <= 0 ? inf : p.x - (lower_.x + x0 * cell_size_);
            const double right = x1 >= nx_ - 1 ? inf : lower_.x + (x1 + 1) * cell_size_ - p.x;
            const double below = y0 <= 0 ? inf : p.y - (lower_.y + y0 * cell_size_);
            const double above = y1 >= ny_ - 1 ? inf : lower_.y + (y1 + 1) * cell_size_ - p.y;
            const double bound = std::min({left, right, below, above});
            if (covers_all || found[k - 1].first < bound * bound) {
                break;
            }
        } else if (covers_all) {
            break;
        }
    }

    std::sort(found.begin(), found.end());
    const std::size_t count = std::min(k, found.size());
    std::vector<std::size_t> result(count);
    for (std::size_t i = 0; i < count; ++i) {
        result[i] = found[i].second;
    }
    return result;
}

}  // namespace rbffd
