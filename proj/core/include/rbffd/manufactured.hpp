#pragma once

#include "rbffd/geometry.hpp"

namespace rbffd {

/// u(x, y) = 1 + sin(4Rx) + cos(3Rx) + sin(2Ry), the manufactured solution
/// dilated by R (R = 1 is the undilated problem).
struct ManufacturedProblem {
    double R = 1.0;

    [[nodiscard]] double u(const Point& p) const;
    [[nodiscard]] double f(const Point& p) const;
};

[[nodiscard]] double exact_u(double x, double y, double R);

/// Partial derivative d^(a+b) u / dx^a dy^b of the dilated solution.
/// Mixed derivatives vanish because u is additively separable.
[[nodiscard]] double exact_deriv(int a, int b, double x, double y, double R);

/// Laplacian of u: the Poisson source term.
[[nodiscard]] double rhs_f(double x, double y, double R);

}  // namespace rbffd
