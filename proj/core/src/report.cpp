#include <charconv>
#include <ostream>

#include "rbffd/analysis.hpp"
#include "rbffd/experiment.hpp"

namespace rbffd {

namespace {

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return text;
}

std::string_view kind_name(NodeKind kind) {
    return kind == NodeKind::Boundary ? "boundary" : "interior";
}

void write_header(const ExperimentConfig& config, std::ostream& out) {
    out << "# config: " << describe(config) << '\n';
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] =
        std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
    return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
    write_header(report.config, out);
    out << "mode,m,h,R,seed,norm_kind,e_op,e_sol,term_degree,term_value\n";
    for (const auto& row : report.rows) {
        out << to_string(row.mode) << ',' << row.m << ',' << format_double(row.h) << ','
            << format_double(row.R) << ',' << row.seed << ',' << to_string(row.norm) << ','
            << format_double(row.e_op) << ',' << format_double(row.e_sol) << ',';
        if (row.term_degree) out << *row.term_degree;
        out << ',';
        if (row.term_value) out << format_double(*row.term_value);
        out << '\n';
    }
    for (const auto& f : report.failures) {
        out << "# error: m=" << f.m << " h=" << format_double(f.h) << " R=" << format_double(f.R)
            << " seed=" << f.seed << " reason=" << one_line(f.reason) << '\n';
    }

    out << "# summary: bands\n";
    out << "band,m,h,R,term_degree,quantity,norm_kind,mean,min,max,count\n";
    for (const auto& b : report.bands) {
        out << "band," << b.m << ',' << format_double(b.h) << ',' << format_double(b.R) << ',';
        if (b.term_degree) out << *b.term_degree;
        out << ',' << to_string(b.quantity) << ',' << to_string(b.norm) << ','
            << format_double(b.mean) << ',' << format_double(b.min) << ','
            << format_double(b.max) << ',' << b.count << '\n';
    }

    out << "# summary: slopes vs " << (report.config.mode == Mode::ConvergeR ? "R" : "h") << '\n';
    out << "slope,m,term_degree,quantity,norm_kind,slope,points,complete\n";
    for (const auto& s : report.slopes) {
        out << "slope," << s.m << ',';
        if (s.term_degree) out << *s.term_degree;
        out << ',' << to_string(s.quantity) << ',' << to_string(s.norm) << ','
            << format_double(s.slope) << ',' << s.points << ',' << (s.complete ? "yes" : "no")
            << '\n';
    }
}

void write_nodes_csv(const NodeSet& nodes, const ExperimentConfig& config, std::ostream& out) {
    write_header(config, out);
    out << "x,y,kind\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << format_double(nodes.positions[i].x) << ',' << format_double(nodes.positions[i].y)
            << ',' << kind_name(nodes.kinds[i]) << '\n';
    }
}

void write_solution_csv(const PoissonRun& run, const ExperimentConfig& config, std::ostream& out) {
    write_header(config, out);
    const auto err = solution_error(run.result.x, run.nodes, run.R);
    out << "x,y,kind,u_num,u_exact,err\n";
    for (std::size_t i = 0; i < run.nodes.size(); ++i) {
        const Point& p = run.nodes.positions[i];
        out << format_double(p.x) << ',' << format_double(p.y) << ',' << kind_name(run.nodes.kinds[i])
            << ',' << format_double(run.result.x[i]) << ',' << format_double(exact_u(p.x, p.y, run.R))
            << ',' << format_double(err.values[i]) << '\n';
    }
}

}  // namespace rbffd
