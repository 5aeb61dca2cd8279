#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbffd {

enum class Mode { ConvergeH, ConvergeR, Terms, Solve, Nodes };

[[nodiscard]] std::string_view to_string(Mode mode);
/// Throws ConfigError for unknown names.
[[nodiscard]] Mode mode_from_string(std::string_view name);

struct ExperimentConfig {
    Mode mode = Mode::ConvergeH;
    std::vector<int> m_list{2, 3, 4};
    std::vector<double> h_list{0.16, 0.08, 0.04, 0.02};
    std::vector<double> r_list{1.0, 2.0, 4.0, 8.0};
    int seeds = 5;                   // ensemble uses seeds 0 .. seeds-1
    std::int64_t seed = 0;           // single seed for `solve` and `nodes`
    double tol = 1e-10;
    std::optional<int> dmax;         // unset: m + 6
    std::string out;                 // empty: stdout

    [[nodiscard]] int dmax_for(int m) const { return dmax.value_or(m + 6); }
};

/// Parses `<mode> [flags]`. Precedence: flags, then the `--config` file, then
/// defaults. Mode-dependent defaults: converge-r uses h = 0.05; terms uses
/// m = 2; solve and nodes use m = 2 and h = 0.05.
/// Throws ConfigError naming the offending flag.
[[nodiscard]] ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Usage text of the command line.
[[nodiscard]] std::string usage();

/// One-line description of every setting that affects results (the output path is omitted).
[[nodiscard]] std::string describe(const ExperimentConfig& config);

}  // namespace rbffd
