#include "rbffd/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "rbffd/errors.hpp"

namespace rbffd {

namespace {

constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::ConvergeH, "converge-h"},
    {Mode::ConvergeR, "converge-r"},
    {Mode::Terms, "terms"},
    {Mode::Solve, "solve"},
    {Mode::Nodes, "nodes"},
};

// Raw option values; the bound variables are only read if the option was given.
struct RawOptions {
    std::string mode;
    std::vector<int> m;
    std::vector<double> h;
    std::vector<double> r;
    int seeds = 0;
    std::int64_t seed = 0;
    double tol = 0.0;
    int dmax = 0;
    std::string out;
};

struct Options {
    CLI::Option* m = nullptr;
    CLI::Option* h = nullptr;
    CLI::Option* r = nullptr;
    CLI::Option* seeds = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* tol = nullptr;
    CLI::Option* dmax = nullptr;
    CLI::Option* out = nullptr;
};

Options build_app(CLI::App& app, RawOptions& raw) {
    app.description("PHS RBF-FD Poisson solver and convergence experiments on the unit disc");
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.add_option("mode", raw.mode, "converge-h | converge-r | terms | solve | nodes")->required();

    Options o;
    o.m = app.add_option("--m", raw.m, "Augmentation degrees (comma list, each in [2, 6])")
              ->delimiter(',');
    o.h = app.add_option("--h", raw.h, "Node spacings (comma list, each in (0, 2))")->delimiter(',');
    o.r = app.add_option("--r", raw.r, "Dilation factors R (comma list, each > 0)")->delimiter(',');
    o.seeds = app.add_option("--seeds", raw.seeds, "Number of fill seeds per sweep cell");
    o.seed = app.add_option("--seed", raw.seed, "Fill seed for solve and nodes");
    o.tol = app.add_option("--tol", raw.tol, "BiCGSTAB relative residual tolerance");
    o.dmax = app.add_option("--dmax", raw.dmax, "Highest term degree in terms mode (default m+6)");
    o.out = app.add_option("--out", raw.out, "Output CSV path (default stdout)");
    return o;
}

[[noreturn]] void reject(std::string_view flag, const std::string& why) {
    throw ConfigError("invalid value for " + std::string(flag) + ": " + why);
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream s;
    s.precision(17);
    for (std::size_t i = 0; i < values.size(); ++i) {
        s << (i ? "," : "") << values[i];
    }
    return s.str();
}

}  // namespace

std::string_view to_string(Mode mode) {
    for (const auto& [m, name] : kModeNames) {
        if (m == mode) {
            return name;
        }
    }
    return "unknown";
}

Mode mode_from_string(std::string_view name) {
    for (const auto& [m, n] : kModeNames) {
        if (n == name) {
            return m;
        }
    }
    throw ConfigError("unknown mode '" + std::string(name) +
                      "' (expected converge-h, converge-r, terms, solve or nodes)");
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app;
    RawOptions raw;
    const Options o = build_app(app, raw);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    ExperimentConfig config;
    config.mode = mode_from_string(raw.mode);
    switch (config.mode) {
        case Mode::ConvergeR:
            config.h_list = {0.05};
            break;
        case Mode::Terms:
            config.m_list = {2};
            break;
        case Mode::Solve:
        case Mode::Nodes:
            config.m_list = {2};
            config.h_list = {0.05};
            break;
        case Mode::ConvergeH:
            break;
    }

    if (o.m->count() > 0) {
        if (raw.m.empty()) reject("--m", "empty list");
        for (const int m : raw.m) {
            if (m < 2 || m > 6) reject("--m", "degree " + std::to_string(m) + " outside [2, 6]");
        }
        config.m_list = raw.m;
    }
    if (o.h->count() > 0) {
        if (raw.h.empty()) reject("--h", "empty list");
        for (const double h : raw.h) {
            if (!(h > 0.0 && h < 2.0)) reject("--h", "spacing " + std::to_string(h) + " outside (0, 2)");
        }
        config.h_list = raw.h;
    }
    if (o.r->count() > 0) {
        if (raw.r.empty()) reject("--r", "empty list");
        for (const double r : raw.r) {
            if (!(r > 0.0)) reject("--r", "dilation must be positive");
        }
        config.r_list = raw.r;
    }
    if (o.seeds->count() > 0) {
        if (raw.seeds < 1) reject("--seeds", "need at least one seed");
        config.seeds = raw.seeds;
    }
    if (o.seed->count() > 0) {
        config.seed = raw.seed;
    }
    if (o.tol->count() > 0) {
        if (!(raw.tol > 0.0 && raw.tol < 1.0)) reject("--tol", "tolerance must lie in (0, 1)");
        config.tol = raw.tol;
    }
    if (o.dmax->count() > 0) {
        const int top = *std::max_element(config.m_list.begin(), config.m_list.end());
        if (raw.dmax <= top) reject("--dmax", "must exceed the largest degree m = " + std::to_string(top));
        config.dmax = raw.dmax;
    }
    if (o.out->count() > 0) {
        config.out = raw.out;
    }
    return config;
}

std::string usage() {
    CLI::App app;
    RawOptions raw;
    build_app(app, raw);
    app.name("rbffd");
    return app.help();
}

std::string describe(const ExperimentConfig& config) {
    std::ostringstream s;
    s << "mode=" << to_string(config.mode) << " m=" << join(config.m_list)
      << " h=" << join(config.h_list) << " r=" << join(config.r_list)
      << " seeds=" << config.seeds << " seed=" << config.seed;
    s.precision(17);
    s << " tol=" << config.tol << " dmax=";
    if (config.dmax) {
        s << *config.dmax;
    } else {
        s << "m+6";
    }
    return s.str();
}

}  // namespace rbffd
