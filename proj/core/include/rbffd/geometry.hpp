#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rbffd {

struct Point {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] double norm() const { return std::hypot(x, y); }

    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] inline double squared_distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

enum class NodeKind : std::uint8_t { Interior, Boundary };

/// Scattered discretization of the closed unit disc.
///
/// Boundary nodes come first (indices [0, boundary_count())), followed by the
/// interior nodes in the order the fill accepted them.
struct NodeSet {
    std::vector<Point> positions;
    std::vector<NodeKind> kinds;
    double h = 0.0;
    std::int64_t seed = 0;

    [[nodiscard]] std::size_t size() const { return positions.size(); }
    [[nodiscard]] bool is_boundary(std::size_t i) const { return kinds[i] == NodeKind::Boundary; }
    [[nodiscard]] std::size_t boundary_count() const;
    [[nodiscard]] std::size_t interior_count() const { return size() - boundary_count(); }
    [[nodiscard]] std::vector<std::size_t> interior_indices() const;

    friend bool operator==(const NodeSet&, const NodeSet&) = default;
};

/// The n nearest nodes of an interior node, ordered by increasing distance
/// (ties by lower index). members[0] is always the center itself.
struct Stencil {
    std::size_t center = 0;
    std::vector<std::size_t> members;

    friend bool operator==(const Stencil&, const Stencil&) = default;
};

/// Fill parameters. Defaults are the values used throughout the project.
struct FillOptions {
    double separation_slack = 0.01;  // candidate rejected if a node is closer than h*(1 - slack)
    int candidates_per_node = 15;
};

/// Stencil size for augmentation degree m: (m+1)(m+2).
[[nodiscard]] constexpr std::size_t stencil_size(int m) {
    return static_cast<std::size_t>((m + 1) * (m + 2));
}

/// round(2*pi/h) equispaced points on the unit circle, the first at angle 0.
/// Throws InvalidSpacing unless 0 < h < 2.
[[nodiscard]] std::vector<Point> discretize_boundary(double h);

/// Advancing-front fill of the disc interior seeded from the given boundary.
[[nodiscard]] NodeSet fill_interior(std::span<const Point> boundary, double h, std::int64_t seed,
                                    const FillOptions& options = {});

/// discretize_boundary followed by fill_interior.
[[nodiscard]] NodeSet discretize_disc(double h, std::int64_t seed);

/// One stencil per interior node, in node order. Throws InsufficientNodes if n > N.
[[nodiscard]] std::vector<Stencil> build_stencils(const NodeSet& nodes, std::size_t n);

}  // namespace rbffd
