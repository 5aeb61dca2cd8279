#include "rbffd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "rbffd/errors.hpp"

namespace rbffd {

namespace {

double factorial(int k) {
    double out = 1.0;
    for (int i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace

ErrorField operator_error(const NodeSet& nodes, std::span<const Stencil> stencils,
                          std::span<const LaplaceWeights> weights, const Field& u,
                          const Field& laplacian_u) {
    if (stencils.size() != weights.size()) {
        throw DimensionMismatch("operator_error: stencils and weights differ in count");
    }
    ErrorField e{std::vector<double>(nodes.size(), 0.0), ErrorKind::Operator};
    for (std::size_t k = 0; k < stencils.size(); ++k) {
        const auto& s = stencils[k];
        const auto& w = weights[k].weights;
        double approx = 0.0;
        for (std::size_t j = 0; j < s.members.size(); ++j) {
            approx += w[j] * u(nodes.positions[s.members[j]]);
        }
        e.values[s.center] = approx - laplacian_u(nodes.positions[s.center]);
    }
    return e;
}

ErrorField operator_error(const NodeSet& nodes, std::span<const Stencil> stencils,
                          std::span<const LaplaceWeights> weights, double R) {
    const ManufacturedProblem problem{R};
    return operator_error(
        nodes, stencils, weights, [&](const Point& p) { return problem.u(p); },
        [&](const Point& p) { return problem.f(p); });
}

ErrorField solution_error(std::span<const double> solution, const NodeSet& nodes, double R) {
    if (solution.size() != nodes.size()) {
        throw DimensionMismatch("solution_error: solution length differs from node count");
    }
    ErrorField e{std::vector<double>(nodes.size(), 0.0), ErrorKind::Solution};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes.is_boundary(i)) {
            const Point& p = nodes.positions[i];
            e.values[i] = solution[i] - exact_u(p.x, p.y, R);
        }
    }
    return e;
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 32;
    if (values.size() <= kBlock) {
        double sum = 0.0;
        for (const double v : values) {
            sum += v;
        }
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

ErrorNorms error_norms(std::span<const double> values) {
    ErrorNorms norms;
    if (values.empty()) {
        return norms;
    }
    std::vector<double> magnitudes(values.size());
    std::transform(values.begin(), values.end(), magnitudes.begin(),
                   [](double v) { return std::abs(v); });
    norms.mean_l1 = pairwise_sum(magnitudes) / static_cast<double>(values.size());
    norms.linf = *std::max_element(magnitudes.begin(), magnitudes.end());
    return norms;
}

BayonaTerm bayona_term(const NodeSet& nodes, std::span<const Stencil> stencils,
                       std::span<const LaplaceWeights> weights, double R, Exponent exponents) {
    BayonaTerm term{exponents, std::vector<double>(nodes.size(), 0.0)};
    const double inv_fact = 1.0 / (factorial(exponents.a) * factorial(exponents.b));
    for (std::size_t k = 0; k < stencils.size(); ++k) {
        const auto& s = stencils[k];
        const auto& w = weights[k].weights;
        const Point& c = nodes.positions[s.center];
        double moment = 0.0;
        for (std::size_t j = 0; j < s.members.size(); ++j) {
            const Point& p = nodes.positions[s.members[j]];
            moment += w[j] * int_pow(p.x - c.x, exponents.a) * int_pow(p.y - c.y, exponents.b);
        }
        term.values[s.center] =
            exact_deriv(exponents.a, exponents.b, c.x, c.y, R) * inv_fact * moment;
    }
    return term;
}

std::vector<BayonaTerm> bayona_terms(const NodeSet& nodes, std::span<const Stencil> stencils,
                                     std::span<const LaplaceWeights> weights, double R, int m,
                                     int d_max) {
    if (d_max <= m) {
        throw ConfigError("bayona_terms: d_max must exceed m");
    }
    std::vector<BayonaTerm> terms;
    for (const auto& e : monomial_basis(d_max).exponents) {
        if (e.degree() > m) {
            terms.push_back(bayona_term(nodes, stencils, weights, R, e));
        }
    }
    return terms;
}

std::vector<TermGroup> group_by_degree(std::span<const BayonaTerm> terms) {
    std::map<int, std::vector<double>> groups;
    for (const auto& term : terms) {
        auto& sum = groups[term.degree()];
        if (sum.empty()) {
            sum.assign(term.values.size(), 0.0);
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += term.values[i];
        }
    }
    std::vector<TermGroup> out;
    for (auto& [degree, values] : groups) {
        out.push_back({degree, std::move(values)});
    }
    return out;
}

std::vector<double> invert_term(const SparseSystem& system, std::span<const double> term,
                                const SolverOptions& options) {
    if (term.size() != system.row_kind.size()) {
        throw DimensionMismatch("invert_term: term length differs from system size");
    }
    std::vector<double> rhs(term.begin(), term.end());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (system.row_kind[i] == NodeKind::Boundary) {
            rhs[i] = 0.0;
        }
    }
    auto result = bicgstab(system.A, rhs, options);
    if (!result.converged) {
        throw NotConverged("invert_term: BiCGSTAB stopped at relative residual " +
                           std::to_string(result.residual));
    }
    return std::move(result.x);
}

double fit_slope(std::span<const double> scales, std::span<const double> errs) {
    if (scales.size() != errs.size()) {
        throw FitError("fit_slope: scales and errors differ in length");
    }
    if (scales.size() < 2) {
        throw FitError("fit_slope: need at least two points, got " + std::to_string(scales.size()));
    }
    const auto n = static_cast<double>(scales.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0) || !(errs[i] > 0.0)) {
            throw FitError("fit_slope: scales and errors must be positive");
        }
        sx += std::log(scales[i]);
        sy += std::log(errs[i]);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double dx = std::log(scales[i]) - mx;
        sxy += dx * (std::log(errs[i]) - my);
        sxx += dx * dx;
    }
    if (!(sxx > 0.0)) {
        throw FitError("fit_slope: all scales are identical");
    }
    return sxy / sxx;
}

}  // namespace rbffd
