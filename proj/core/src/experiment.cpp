#include "rbffd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "rbffd/analysis.hpp"
#include "rbffd/errors.hpp"

namespace rbffd {

namespace {

SolverOptions solver_options(const ExperimentConfig& config) {
    SolverOptions options;
    options.tol = config.tol;
    return options;
}

void push_pair(std::vector<ReportRow>& rows, ReportRow base, ErrorNorms op, ErrorNorms sol) {
    base.norm = NormKind::MeanL1;
    base.e_op = op.mean_l1;
    base.e_sol = sol.mean_l1;
    rows.push_back(base);
    base.norm = NormKind::Linf;
    base.e_op = op.linf;
    base.e_sol = sol.linf;
    rows.push_back(base);
}

/// Runs the pipeline for one sweep cell and appends its two norm rows.
void run_cell(ExperimentReport& report, Mode mode, int m, double h, double R, std::int64_t seed) {
    try {
        const auto run = solve_poisson(h, m, seed, R, solver_options(report.config));
        const auto op = operator_error(run.nodes, run.stencils, run.weights, R);
        const auto sol = solution_error(run.result.x, run.nodes, R);
        ReportRow base;
        base.mode = mode;
        base.m = m;
        base.h = h;
        base.R = R;
        base.seed = seed;
        push_pair(report.rows, base, error_norms(op), error_norms(sol));
    } catch (const Error& e) {
        report.failures.push_back({m, h, R, seed, e.what()});
    }
}

}  // namespace

std::string_view to_string(NormKind kind) {
    return kind == NormKind::MeanL1 ? "mean_l1" : "linf";
}

std::string_view to_string(Quantity q) { return q == Quantity::Operator ? "e_op" : "e_sol"; }

const SlopeSummary* ExperimentReport::find_slope(int m, Quantity q, NormKind norm,
                                                 std::optional<int> term_degree) const {
    for (const auto& s : slopes) {
        if (s.m == m && s.quantity == q && s.norm == norm && s.term_degree == term_degree) {
            return &s;
        }
    }
    return nullptr;
}

ExperimentReport run_converge_h(const ExperimentConfig& config) {
    if (config.h_list.size() < 3) {
        throw ConfigError("converge-h needs at least three --h values");
    }
    ExperimentReport report;
    report.config = config;
    report.config.mode = Mode::ConvergeH;
    for (const int m : config.m_list) {
        for (const double h : config.h_list) {
            for (int seed = 0; seed < config.seeds; ++seed) {
                run_cell(report, Mode::ConvergeH, m, h, 1.0, seed);
            }
        }
    }
    summarize(report);
    return report;
}

ExperimentReport run_converge_r(const ExperimentConfig& config) {
    if (config.h_list.size() != 1) {
        throw ConfigError("converge-r needs exactly one --h value");
    }
    if (config.r_list.size() < 2) {
        throw FitError("converge-r needs at least two --r values to fit a slope");
    }
    ExperimentReport report;
    report.config = config;
    report.config.mode = Mode::ConvergeR;
    const double h = config.h_list.front();
    for (const int m : config.m_list) {
        for (const double R : config.r_list) {
            for (int seed = 0; seed < config.seeds; ++seed) {
                run_cell(report, Mode::ConvergeR, m, h, R, seed);
            }
        }
    }
    summarize(report);
    return report;
}

ExperimentReport run_terms(const ExperimentConfig& config) {
    if (config.m_list.size() != 1) {
        throw ConfigError("terms needs exactly one --m value");
    }
    if (config.h_list.size() < 2) {
        throw FitError("terms needs at least two --h values to fit slopes");
    }
    ExperimentReport report;
    report.config = config;
    report.config.mode = Mode::Terms;
    const int m = config.m_list.front();
    const int d_max = config.dmax_for(m);
    const auto options = solver_options(config);
    constexpr double R = 1.0;

    for (const double h : config.h_list) {
        for (int seed = 0; seed < config.seeds; ++seed) {
            try {
                const auto run = solve_poisson(h, m, seed, R, options);
                const auto op = operator_error(run.nodes, run.stencils, run.weights, R);
                const auto sol = solution_error(run.result.x, run.nodes, R);
                ReportRow base;
                base.mode = Mode::Terms;
                base.m = m;
                base.h = h;
                base.R = R;
                base.seed = seed;

                std::vector<ReportRow> cell;
                push_pair(cell, base, error_norms(op), error_norms(sol));

                const auto terms = bayona_terms(run.nodes, run.stencils, run.weights, R, m, d_max);
                for (const auto& group : group_by_degree(terms)) {
                    const auto inverted = invert_term(run.system, group.values, options);
                    ReportRow term = base;
                    term.term_degree = group.degree;
                    term.term_value =
                        pairwise_sum(group.values) / static_cast<double>(group.values.size());
                    push_pair(cell, term, error_norms(group.values), error_norms(inverted));
                }
                report.rows.insert(report.rows.end(), cell.begin(), cell.end());
            } catch (const Error& e) {
                report.failures.push_back({m, h, R, seed, e.what()});
            }
        }
    }
    summarize(report);
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    switch (config.mode) {
        case Mode::ConvergeH: return run_converge_h(config);
        case Mode::ConvergeR: return run_converge_r(config);
        case Mode::Terms: return run_terms(config);
        default: throw ConfigError("mode " + std::string(to_string(config.mode)) +
                                   " does not produce an experiment report");
    }
}

void summarize(ExperimentReport& report) {
    const auto& config = report.config;
    const bool by_r = config.mode == Mode::ConvergeR;

    // (m, degree or -1, h, R, norm) -> per-seed values in row order
    using CellKey = std::tuple<int, int, double, double, int>;
    std::map<CellKey, std::pair<std::vector<double>, std::vector<double>>> cells;
    for (const auto& row : report.rows) {
        auto& [op, sol] = cells[{row.m, row.term_degree.value_or(-1), row.h, row.R,
                                 static_cast<int>(row.norm)}];
        op.push_back(row.e_op);
        sol.push_back(row.e_sol);
    }

    report.bands.clear();
    // (m, degree, quantity, norm) -> (x, mean) in sweep order
    using SeriesKey = std::tuple<int, int, int, int>;
    std::map<SeriesKey, std::vector<std::pair<double, double>>> series;
    std::map<SeriesKey, bool> full;

    for (const auto& [key, values] : cells) {
        const auto& [m, degree, h, R, norm] = key;
        for (const Quantity q : {Quantity::Operator, Quantity::Solution}) {
            const auto& v = q == Quantity::Operator ? values.first : values.second;
            Band band;
            band.m = m;
            band.h = h;
            band.R = R;
            if (degree >= 0) band.term_degree = degree;
            band.quantity = q;
            band.norm = static_cast<NormKind>(norm);
            band.count = v.size();
            band.mean = pairwise_sum(v) / static_cast<double>(v.size());
            band.min = *std::min_element(v.begin(), v.end());
            band.max = *std::max_element(v.begin(), v.end());
            report.bands.push_back(band);

            const SeriesKey skey{m, degree, static_cast<int>(q), norm};
            series[skey].emplace_back(by_r ? R : h, band.mean);
            auto [it, inserted] = full.try_emplace(skey, true);
            if (band.count != static_cast<std::size_t>(config.seeds)) {
                it->second = false;
            }
        }
    }

    const std::size_t expected_points = by_r ? config.r_list.size() : config.h_list.size();
    report.slopes.clear();
    for (const auto& [key, points] : series) {
        const auto& [m, degree, q, norm] = key;
        SlopeSummary s;
        s.m = m;
        if (degree >= 0) s.term_degree = degree;
        s.quantity = static_cast<Quantity>(q);
        s.norm = static_cast<NormKind>(norm);
        s.points = points.size();
        s.complete = full[key] && points.size() == expected_points;
        for (const auto& f : report.failures) {
            if (f.m == m) s.complete = false;
        }
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto& [x, y] : points) {
            xs.push_back(x);
            ys.push_back(y);
        }
        try {
            s.slope = fit_slope(xs, ys);
        } catch (const FitError&) {
            s.slope = std::numeric_limits<double>::quiet_NaN();
            s.complete = false;
        }
        report.slopes.push_back(s);
    }
}

}  // namespace rbffd
