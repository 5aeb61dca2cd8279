#include "rbffd/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbffd/errors.hpp"
#include "rbffd/manufactured.hpp"

namespace rbffd {

namespace {

constexpr double kBreakdown = 1e-300;

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void residual(const CsrMatrix& A, std::span<const double> b, std::span<const double> x,
              std::span<double> r) {
    A.multiply(x, r);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = b[i] - r[i];
    }
}

}  // namespace

SparseSystem assemble(const NodeSet& nodes, std::span<const Stencil> stencils,
                      std::span<const LaplaceWeights> weights) {
    const std::size_t n = nodes.size();
    if (stencils.size() != weights.size() || stencils.size() != nodes.interior_count()) {
        throw AssemblyError("assemble: expected one stencil and one weight set per interior node");
    }

    // Row lookup: stencil index of each interior node.
    std::vector<std::size_t> slot(n, stencils.size());
    for (std::size_t k = 0; k < stencils.size(); ++k) {
        const auto& s = stencils[k];
        if (s.center >= n || nodes.is_boundary(s.center) || slot[s.center] != stencils.size()) {
            throw AssemblyError("assemble: stencil " + std::to_string(k) +
                                " has an invalid or repeated center");
        }
        if (weights[k].center != s.center || weights[k].weights.size() != s.members.size()) {
            throw AssemblyError("assemble: weights misaligned with stencil of node " +
                                std::to_string(s.center));
        }
        slot[s.center] = k;
    }

    SparseSystem system;
    system.A = CsrMatrix(n);
    system.rhs.assign(n, 0.0);
    system.row_kind = nodes.kinds;
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t i = 0; i < n; ++i) {
        row.clear();
        if (nodes.is_boundary(i)) {
            row.emplace_back(i, 1.0);
        } else {
            const auto& s = stencils[slot[i]];
            const auto& w = weights[slot[i]].weights;
            for (std::size_t j = 0; j < s.members.size(); ++j) {
                row.emplace_back(s.members[j], w[j]);
            }
        }
        system.A.append_row(row);
    }
    return system;
}

std::vector<double> build_rhs(const NodeSet& nodes, const Field& f, const Field& g) {
    std::vector<double> rhs(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        rhs[i] = nodes.is_boundary(i) ? g(nodes.positions[i]) : f(nodes.positions[i]);
    }
    return rhs;
}

SolverResult bicgstab(const CsrMatrix& A, std::span<const double> b, const SolverOptions& options,
                      std::span<const double> x0) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n || (!x0.empty() && x0.size() != n)) {
        throw DimensionMismatch("bicgstab: matrix must be square and match b and x0");
    }
    const std::size_t max_iter = options.max_iter == 0 ? 10 * n : options.max_iter;

    SolverResult result;
    result.x.assign(n, 0.0);
    if (!x0.empty()) {
        result.x.assign(x0.begin(), x0.end());
    }

    const double b_norm = norm2(b);
    if (b_norm == 0.0) {
        result.x.assign(n, 0.0);
        result.converged = true;
        return result;
    }

    std::vector<double> r(n), r_hat(n), p(n, 0.0), v(n, 0.0), s(n), t(n);
    auto& x = result.x;
    residual(A, b, x, r);
    result.residual = norm2(r) / b_norm;
    if (result.residual <= options.tol) {
        result.converged = true;
        return result;
    }

    bool restarted = false;
    bool fresh = true;  // (re)initialize the Krylov state on the next iteration
    double rho = 1.0;
    double alpha = 1.0;
    double omega = 1.0;

    // Restarts from the true residual. Returns false once the restart budget is spent.
    auto restart = [&](bool breakdown) {
        if (breakdown) {
            if (restarted) {
                return false;
            }
            restarted = true;
        }
        residual(A, b, x, r);
        fresh = true;
        return true;
    };

    while (result.iterations < max_iter) {
        if (fresh) {
            r_hat = r;
            std::fill(p.begin(), p.end(), 0.0);
            std::fill(v.begin(), v.end(), 0.0);
            rho = alpha = omega = 1.0;
            fresh = false;
        }
        ++result.iterations;

        const double rho_next = dot(r_hat, r);
        if (std::abs(rho_next) < kBreakdown) {
            if (!restart(true)) {
                break;
            }
            continue;
        }
        const double beta = (rho_next / rho) * (alpha / omega);
        rho = rho_next;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = r[i] + beta * (p[i] - omega * v[i]);
        }
        A.multiply(p, v);
        const double denom = dot(r_hat, v);
        if (std::abs(denom) < kBreakdown) {
            if (!restart(true)) {
                break;
            }
            continue;
        }
        alpha = rho / denom;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = r[i] - alpha * v[i];
        }

        bool candidate = false;
        if (norm2(s) / b_norm <= options.tol) {
            for (std::size_t i = 0; i < n; ++i) {
                x[i] += alpha * p[i];
            }
            candidate = true;
        } else {
            A.multiply(s, t);
            const double tt = dot(t, t);
            omega = tt > 0.0 ? dot(t, s) / tt : 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] += alpha * p[i] + omega * s[i];
                r[i] = s[i] - omega * t[i];
            }
            candidate = norm2(r) / b_norm <= options.tol;
            if (!candidate && std::abs(omega) < kBreakdown) {
                if (!restart(true)) {
                    break;
                }
                continue;
            }
        }

        if (candidate) {
            // The recursive residual drifts from the true one; confirm before stopping.
            residual(A, b, x, r);
            result.residual = norm2(r) / b_norm;
            if (result.residual <= options.tol) {
                result.converged = true;
                return result;
            }
            restart(false);
        }
    }

    residual(A, b, x, r);
    result.residual = norm2(r) / b_norm;
    result.converged = result.residual <= options.tol;
    return result;
}

PoissonRun solve_poisson(double h, int m, std::int64_t seed, double R,
                         const SolverOptions& options) {
    if (m < 2 || m > 6) {
        throw ConfigError("solve_poisson: augmentation degree must lie in [2, 6], got " +
                          std::to_string(m));
    }
    if (!(R > 0.0)) {
        throw ConfigError("solve_poisson: dilation R must be positive");
    }

    PoissonRun run;
    run.m = m;
    run.R = R;
    run.nodes = discretize_disc(h, seed);
    run.stencils = build_stencils(run.nodes, stencil_size(m));
    run.weights = compute_weights(run.nodes, run.stencils, m);
    run.system = assemble(run.nodes, run.stencils, run.weights);

    const ManufacturedProblem problem{R};
    run.system.rhs = build_rhs(
        run.nodes, [&](const Point& p) { return problem.f(p); },
        [&](const Point& p) { return problem.u(p); });

    // Starting from the Dirichlet data keeps the boundary residual at exactly
    // zero: identity rows never mix interior components into boundary ones.
    std::vector<double> x0(run.nodes.size(), 0.0);
    for (std::size_t i = 0; i < x0.size(); ++i) {
        if (run.nodes.is_boundary(i)) {
            x0[i] = run.system.rhs[i];
        }
    }
    run.result = bicgstab(run.system.A, run.system.rhs, options, x0);
    if (!run.result.converged) {
        throw NotConverged("BiCGSTAB did not converge (h=" + std::to_string(h) +
                           ", m=" + std::to_string(m) + ", seed=" + std::to_string(seed) +
                           ", R=" + std::to_string(R) + "): relative residual " +
                           std::to_string(run.result.residual) + " after " +
                           std::to_string(run.result.iterations) + " iterations");
    }
    return run;
}

}  // namespace rbffd
