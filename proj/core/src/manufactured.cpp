#include "rbffd/manufactured.hpp"

#include <cmath>

namespace rbffd {

namespace {

// n-th derivative of sin(t) and cos(t), respectively.
double sin_derivative(int n, double t) {
    switch (n % 4) {
        case 0: return std::sin(t);
        case 1: return std::cos(t);
        case 2: return -std::sin(t);
        default: return -std::cos(t);
    }
}

double cos_derivative(int n, double t) { return sin_derivative(n + 1, t); }

}  // namespace

double exact_u(double x, double y, double R) {
    return 1.0 + std::sin(4.0 * R * x) + std::cos(3.0 * R * x) + std::sin(2.0 * R * y);
}

double exact_deriv(int a, int b, double x, double y, double R) {
    if (a == 0 && b == 0) {
        return exact_u(x, y, R);
    }
    if (a > 0 && b > 0) {
        return 0.0;
    }
    if (a > 0) {
        return std::pow(4.0 * R, a) * sin_derivative(a, 4.0 * R * x) +
               std::pow(3.0 * R, a) * cos_derivative(a, 3.0 * R * x);
    }
    return std::pow(2.0 * R, b) * sin_derivative(b, 2.0 * R * y);
}

double rhs_f(double x, double y, double R) {
    return exact_deriv(2, 0, x, y, R) + exact_deriv(0, 2, x, y, R);
}

double ManufacturedProblem::u(const Point& p) const { return exact_u(p.x, p.y, R); }

double ManufacturedProblem::f(const Point& p) const { return rhs_f(p.x, p.y, R); }

}  // namespace rbffd
