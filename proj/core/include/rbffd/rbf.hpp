#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rbffd/geometry.hpp"

namespace rbffd {

/// Exponent k of the polyharmonic kernel r^k (odd).
inline constexpr int kPhsExponent = 3;

/// phi(r) = r^3.
[[nodiscard]] double phs_eval(double r);

/// Two-dimensional Laplacian of phi(|x|) as a function of r: phi'' + phi'/r = 9r.
[[nodiscard]] double phs_laplacian(double r);

struct Exponent {
    int a = 0;  // power of x
    int b = 0;  // power of y

    [[nodiscard]] int degree() const { return a + b; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// All monomials x^a y^b with a + b <= m, graded by degree, then by descending a.
struct MonomialBasis {
    int m = 0;
    std::vector<Exponent> exponents;

    [[nodiscard]] std::size_t size() const { return exponents.size(); }
};

[[nodiscard]] MonomialBasis monomial_basis(int m);

/// Laplacian of x^a y^b at the origin: 2 for x^2 and y^2, 0 otherwise.
[[nodiscard]] double monomial_laplacian_at_origin(Exponent e);

/// Laplacian RBF-FD weights of one stencil, aligned with Stencil::members.
struct LaplaceWeights {
    std::size_t center = 0;
    std::vector<double> weights;
    double scale = 1.0;  // stencil radius used for shift-and-scale conditioning
};

/// Solves the augmented PHS saddle-point system for the stencil whose first
/// point is the center. `points.size()` must equal (m+1)(m+2).
///
/// The points are shifted to the center and scaled by the stencil radius
/// before assembly; the returned weights are in the original coordinates.
/// Throws DegenerateStencil (tagged with `center`) when the local matrix is
/// numerically singular.
[[nodiscard]] LaplaceWeights laplace_weights(std::span<const Point> points, int m,
                                             std::size_t center = 0);

/// Weights for every stencil of a node set.
[[nodiscard]] std::vector<LaplaceWeights> compute_weights(const NodeSet& nodes,
                                                          std::span<const Stencil> stencils, int m);

}  // namespace rbffd
