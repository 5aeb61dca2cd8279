#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rbffd/geometry.hpp"
#include "rbffd/rbf.hpp"
#include "rbffd/sparse.hpp"

namespace rbffd {

/// Global collocation system: interior rows hold Laplacian weights, boundary
/// rows are identity rows for the Dirichlet data.
struct SparseSystem {
    CsrMatrix A;
    std::vector<double> rhs;
    std::vector<NodeKind> row_kind;
};

struct SolverResult {
    std::vector<double> x;
    std::size_t iterations = 0;
    double residual = 0.0;  // final true relative residual |b - Ax| / |b|
    bool converged = false;
};

struct SolverOptions {
    double tol = 1e-10;
    std::size_t max_iter = 0;  // 0: 10 * N
};

/// Builds the matrix; rhs is left zeroed. Throws AssemblyError if stencils and
/// weights do not line up with the node set.
[[nodiscard]] SparseSystem assemble(const NodeSet& nodes, std::span<const Stencil> stencils,
                                    std::span<const LaplaceWeights> weights);

using Field = std::function<double(const Point&)>;

/// f at interior nodes, g at boundary nodes.
[[nodiscard]] std::vector<double> build_rhs(const NodeSet& nodes, const Field& f, const Field& g);

/// Unpreconditioned BiCGSTAB. An empty x0 means the zero vector.
///
/// Stops when the true relative residual drops to `tol`. A breakdown restarts
/// once from the current iterate; a second one ends the solve unconverged.
[[nodiscard]] SolverResult bicgstab(const CsrMatrix& A, std::span<const double> b,
                                    const SolverOptions& options = {},
                                    std::span<const double> x0 = {});

/// Everything produced by one run of the pipeline.
struct PoissonRun {
    int m = 0;
    double R = 1.0;
    NodeSet nodes;
    std::vector<Stencil> stencils;
    std::vector<LaplaceWeights> weights;
    SparseSystem system;
    SolverResult result;
};

/// Discretize, build weights, assemble, and solve the Poisson problem for the
/// manufactured solution dilated by R. Throws NotConverged if BiCGSTAB fails.
[[nodiscard]] PoissonRun solve_poisson(double h, int m, std::int64_t seed, double R,
                                       const SolverOptions& options = {});

}  // namespace rbffd
