#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbffd/config.hpp"
#include "rbffd/geometry.hpp"
#include "rbffd/system.hpp"

namespace rbffd {

enum class NormKind { MeanL1, Linf };

[[nodiscard]] std::string_view to_string(NormKind kind);

/// One measurement. In terms mode, rows with a term degree carry the norm of
/// that degree group before (e_op) and after (e_sol) inversion of the global
/// system, and term_value holds the group's signed mean before inversion.
struct ReportRow {
    Mode mode = Mode::ConvergeH;
    int m = 0;
    double h = 0.0;
    double R = 1.0;
    std::int64_t seed = 0;
    NormKind norm = NormKind::MeanL1;
    double e_op = 0.0;
    double e_sol = 0.0;
    std::optional<int> term_degree;
    std::optional<double> term_value;
};

struct RunFailure {
    int m = 0;
    double h = 0.0;
    double R = 1.0;
    std::int64_t seed = 0;
    std::string reason;
};

enum class Quantity { Operator, Solution };

[[nodiscard]] std::string_view to_string(Quantity q);

/// Seed-ensemble statistics of one sweep cell.
struct Band {
    int m = 0;
    double h = 0.0;
    double R = 1.0;
    std::optional<int> term_degree;
    Quantity quantity = Quantity::Operator;
    NormKind norm = NormKind::MeanL1;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// Fitted log-log slope of seed-averaged errors against h (or R in converge-r).
struct SlopeSummary {
    int m = 0;
    std::optional<int> term_degree;
    Quantity quantity = Quantity::Operator;
    NormKind norm = NormKind::MeanL1;
    double slope = 0.0;  // NaN when fewer than two sweep points survived
    std::size_t points = 0;
    bool complete = true;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReportRow> rows;
    std::vector<RunFailure> failures;
    std::vector<Band> bands;
    std::vector<SlopeSummary> slopes;

    /// Looks up a slope; returns nullptr if absent.
    [[nodiscard]] const SlopeSummary* find_slope(int m, Quantity q, NormKind norm,
                                                 std::optional<int> term_degree = {}) const;
};

/// Operator and solution error convergence under decreasing h at R = 1.
[[nodiscard]] ExperimentReport run_converge_h(const ExperimentConfig& config);

/// Error scaling with the dilation R at a single fixed h.
[[nodiscard]] ExperimentReport run_converge_r(const ExperimentConfig& config);

/// Per-degree truncation terms before and after inverting the global system.
[[nodiscard]] ExperimentReport run_terms(const ExperimentConfig& config);

/// Dispatches to the run_* function of config.mode (report modes only).
[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig& config);

/// Recomputes bands and slopes from report.rows and report.failures.
void summarize(ExperimentReport& report);

void write_report_csv(const ExperimentReport& report, std::ostream& out);

/// `x,y,kind` with kind in {interior, boundary}.
void write_nodes_csv(const NodeSet& nodes, const ExperimentConfig& config, std::ostream& out);

/// `x,y,kind,u_num,u_exact,err`.
void write_solution_csv(const PoissonRun& run, const ExperimentConfig& config, std::ostream& out);

/// Shortest round-trip-safe rendering with 17 significant digits.
[[nodiscard]] std::string format_double(double value);

}  // namespace rbffd
