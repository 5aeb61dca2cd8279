#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rbffd/geometry.hpp"
#include "rbffd/manufactured.hpp"
#include "rbffd/rbf.hpp"
#include "rbffd/system.hpp"

namespace rbffd {

enum class ErrorKind { Operator, Solution };

/// Signed per-node error, indexed like the node set. Boundary entries are zero.
struct ErrorField {
    std::vector<double> values;
    ErrorKind kind = ErrorKind::Operator;
};

struct ErrorNorms {
    double mean_l1 = 0.0;  // sum |e_i| / N
    double linf = 0.0;
};

/// e_op(i) = sum_j w_j u(x_j) - f(x_i) at interior nodes.
[[nodiscard]] ErrorField operator_error(const NodeSet& nodes, std::span<const Stencil> stencils,
                                        std::span<const LaplaceWeights> weights, double R);

/// Same for an arbitrary field u with known Laplacian.
[[nodiscard]] ErrorField operator_error(const NodeSet& nodes, std::span<const Stencil> stencils,
                                        std::span<const LaplaceWeights> weights, const Field& u,
                                        const Field& laplacian_u);

/// e_sol(i) = solution(i) - u(x_i), with exact zeros at boundary nodes.
[[nodiscard]] ErrorField solution_error(std::span<const double> solution, const NodeSet& nodes,
                                        double R);

[[nodiscard]] ErrorNorms error_norms(std::span<const double> values);
[[nodiscard]] inline ErrorNorms error_norms(const ErrorField& e) { return error_norms(e.values); }

/// Pairwise summation; the result depends only on the input order.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// One monomial term of the truncation error expansion:
///   value(i) = D^(a,b) u(x_i) / (a! b!) * sum_j w_j (x_j - x_i)^a (y_j - y_i)^b.
/// Values are indexed like the node set (zero at boundary nodes).
struct BayonaTerm {
    Exponent exponents;
    std::vector<double> values;

    [[nodiscard]] int degree() const { return exponents.degree(); }
    /// Power of h the term scales with (weights scale as h^-2).
    [[nodiscard]] int h_power() const { return degree() - 2; }
};

/// Every monomial term with m < a + b <= d_max, in graded order.
[[nodiscard]] std::vector<BayonaTerm> bayona_terms(const NodeSet& nodes,
                                                   std::span<const Stencil> stencils,
                                                   std::span<const LaplaceWeights> weights,
                                                   double R, int m, int d_max);

/// Moment terms for arbitrary exponents (used to check that low-degree terms vanish).
[[nodiscard]] BayonaTerm bayona_term(const NodeSet& nodes, std::span<const Stencil> stencils,
                                     std::span<const LaplaceWeights> weights, double R,
                                     Exponent exponents);

/// Terms of one total degree summed together.
struct TermGroup {
    int degree = 0;
    std::vector<double> values;

    [[nodiscard]] int h_power() const { return degree - 2; }
};

[[nodiscard]] std::vector<TermGroup> group_by_degree(std::span<const BayonaTerm> terms);

/// Solves A z = t, where t carries the term at interior rows and zero at
/// boundary rows. Throws NotConverged on solver failure.
[[nodiscard]] std::vector<double> invert_term(const SparseSystem& system,
                                              std::span<const double> term,
                                              const SolverOptions& options = {});

/// Least-squares slope of log(err) against log(scale).
/// Throws FitError for fewer than two points, mismatched sizes, or non-positive values.
[[nodiscard]] double fit_slope(std::span<const double> scales, std::span<const double> errs);

}  // namespace rbffd
