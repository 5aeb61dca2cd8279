// Command-line front end: experiment sweeps, single solves and node dumps.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rbffd/config.hpp"
#include "rbffd/errors.hpp"
#include "rbffd/experiment.hpp"
#include "rbffd/geometry.hpp"
#include "rbffd/system.hpp"

namespace {

int run(const rbffd::ExperimentConfig& config, std::ostream& out) {
    using rbffd::Mode;
    switch (config.mode) {
        case Mode::Nodes: {
            const auto nodes = rbffd::discretize_disc(config.h_list.front(), config.seed);
            rbffd::write_nodes_csv(nodes, config, out);
            return 0;
        }
        case Mode::Solve: {
            rbffd::SolverOptions options;
            options.tol = config.tol;
            const auto result = rbffd::solve_poisson(config.h_list.front(), config.m_list.front(),
                                                     config.seed, config.r_list.front(), options);
            std::cerr << "N=" << result.nodes.size() << " iterations=" << result.result.iterations
                      << " residual=" << result.result.residual << '\n';
            rbffd::write_solution_csv(result, config, out);
            return 0;
        }
        default: {
            const auto report = rbffd::run_experiment(config);
            rbffd::write_report_csv(report, out);
            for (const auto& f : report.failures) {
                std::cerr << "warning: run failed (m=" << f.m << ", h=" << f.h << ", R=" << f.R
                          << ", seed=" << f.seed << "): " << f.reason << '\n';
            }
            for (const auto& s : report.slopes) {
                if (s.norm != rbffd::NormKind::MeanL1) continue;
                std::cerr << "m=" << s.m;
                if (s.term_degree) std::cerr << " degree=" << *s.term_degree;
                std::cerr << ' ' << rbffd::to_string(s.quantity) << " slope=" << s.slope
                          << (s.complete ? "" : " (incomplete)") << '\n';
            }
            return report.failures.empty() ? 0 : 3;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    for (const auto& a : args) {
        if (a == "--help") {
            std::cout << rbffd::usage();
            return 0;
        }
    }
    try {
        const auto config = rbffd::parse_config(args);
        if (config.out.empty()) {
            return run(config, std::cout);
        }
        std::ofstream file(config.out);
        if (!file) {
            std::cerr << "error: cannot open " << config.out << " for writing\n";
            return 1;
        }
        return run(config, file);
    } catch (const rbffd::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << rbffd::usage();
        return 2;
    } catch (const rbffd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
