#include "rbffd/rbf.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rbffd/errors.hpp"

namespace rbffd {

namespace {

// Local matrices whose reciprocal condition estimate falls below this are rejected.
constexpr double kMinRcond = 1e3 * std::numeric_limits<double>::epsilon();

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace

double phs_eval(double r) { return int_pow(r, kPhsExponent); }

double phs_laplacian(double r) {
    constexpr double k = kPhsExponent;
    return k * k * int_pow(r, kPhsExponent - 2);
}

MonomialBasis monomial_basis(int m) {
    MonomialBasis basis;
    basis.m = m;
    if (m < 0) {
        return basis;
    }
    basis.exponents.reserve(static_cast<std::size_t>((m + 1) * (m + 2) / 2));
    for (int degree = 0; degree <= m; ++degree) {
        for (int a = degree; a >= 0; --a) {
            basis.exponents.push_back({a, degree - a});
        }
    }
    return basis;
}

double monomial_laplacian_at_origin(Exponent e) {
    if ((e.a == 2 && e.b == 0) || (e.a == 0 && e.b == 2)) {
        return 2.0;
    }
    return 0.0;
}

LaplaceWeights laplace_weights(std::span<const Point> points, int m, std::size_t center) {
    const std::size_t n = points.size();
    if (m < 0 || n != stencil_size(m)) {
        throw DimensionMismatch("laplace_weights: stencil of node " + std::to_string(center) +
                                " has " + std::to_string(n) + " points, degree " +
                                std::to_string(m) + " needs " +
                                std::to_string(stencil_size(std::max(m, 0))));
    }

    const Point c = points.front();
    double radius = 0.0;
    for (const auto& p : points) {
        radius = std::max(radius, std::sqrt(squared_distance(p, c)));
    }
    if (!(radius > 0.0)) {
        throw DegenerateStencil(center, "degenerate stencil at node " + std::to_string(center) +
                                            ": all points coincide");
    }

    std::vector<Point> local(n);
    for (std::size_t j = 0; j < n; ++j) {
        local[j] = {(points[j].x - c.x) / radius, (points[j].y - c.y) / radius};
    }

    const MonomialBasis basis = monomial_basis(m);
    const std::size_t terms = basis.size();
    const auto size = static_cast<Eigen::Index>(n + terms);

    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(size, size);
    Eigen::VectorXd rhs(size);
    for (std::size_t j = 0; j < n; ++j) {
        const auto row = static_cast<Eigen::Index>(j);
        for (std::size_t k = j + 1; k < n; ++k) {
            const double value = phs_eval(std::sqrt(squared_distance(local[j], local[k])));
            system(row, static_cast<Eigen::Index>(k)) = value;
            system(static_cast<Eigen::Index>(k), row) = value;
        }
        for (std::size_t l = 0; l < terms; ++l) {
            const auto col = static_cast<Eigen::Index>(n + l);
            const double value =
                int_pow(local[j].x, basis.exponents[l].a) * int_pow(local[j].y, basis.exponents[l].b);
            system(row, col) = value;
            system(col, row) = value;
        }
        rhs(row) = phs_laplacian(local[j].norm());
    }
    for (std::size_t l = 0; l < terms; ++l) {
        rhs(static_cast<Eigen::Index>(n + l)) = monomial_laplacian_at_origin(basis.exponents[l]);
    }

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    const double rcond = lu.rcond();
    if (!(rcond >= kMinRcond)) {
        throw DegenerateStencil(center, "degenerate stencil at node " + std::to_string(center) +
                                            ": reciprocal condition estimate " +
                                            std::to_string(rcond));
    }
    const Eigen::VectorXd solution = lu.solve(rhs);

    LaplaceWeights out;
    out.center = center;
    out.scale = radius;
    out.weights.resize(n);
    const double inv_r2 = 1.0 / (radius * radius);
    for (std::size_t j = 0; j < n; ++j) {
        out.weights[j] = solution(static_cast<Eigen::Index>(j)) * inv_r2;
        if (!std::isfinite(out.weights[j])) {
            throw DegenerateStencil(center, "non-finite weight at node " + std::to_string(center));
        }
    }
    return out;
}

std::vector<LaplaceWeights> compute_weights(const NodeSet& nodes, std::span<const Stencil> stencils,
                                            int m) {
    std::vector<LaplaceWeights> all;
    all.reserve(stencils.size());
    std::vector<Point> points;
    for (const auto& stencil : stencils) {
        points.clear();
        for (const std::size_t j : stencil.members) {
            points.push_back(nodes.positions[j]);
        }
        all.push_back(laplace_weights(points, m, stencil.center));
    }
    return all;
}

}  // namespace rbffd
