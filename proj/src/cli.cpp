#include "winding/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "winding/errors.hpp"
#include "winding/limit_laws.hpp"
#include "winding/oracles.hpp"

namespace winding {

namespace {

constexpr std::size_t kPdfCurvePoints = 512;

std::string format_15g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::optional<LimitLaw> law_by_name(const std::string& name) {
    // The pdfs are parameter-free in their normalized variable.
    if (name == "point") return PointVortex{1.0, 1.0};
    if (name == "disk") return DiskVortex{1.0, 1.0};
    if (name == "annulus") return AnnulusGauss{0.0, 1.0, 2.0};
    if (name == "point-free") return PointFree{1.0};
    if (name == "disk-free") return DiskFree{1.0};
    return std::nullopt;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The value following --config (or --config=...), if present.
std::optional<std::string> find_config_path(int argc, const char* const* argv) {
    const std::string flag = "--config";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == flag && i + 1 < argc) return std::string(argv[i + 1]);
        if (arg.rfind(flag + "=", 0) == 0) return arg.substr(flag.size() + 1);
    }
    return std::nullopt;
}

void add_run_options(CLI::App& cmd, RunConfig& cfg, std::string& config_path) {
    cmd.add_option("--config", config_path, "JSON config, or a report.json whose echoed config is reused");
    cmd.add_option("--geometry", cfg.geometry, "point | disk | annulus")
        ->check(CLI::IsMember({"point", "disk", "annulus"}));
    cmd.add_option("--a", cfg.a, "inner (disk) radius");
    cmd.add_option("--b", cfg.b, "outer radius (annulus)");
    cmd.add_option("--beta", cfg.beta, "vortex strength");
    cmd.add_option("--r0", cfg.r0, "start radius");
    cmd.add_option("--t", cfg.t_list, "horizon; repeat for several")->take_all();
    cmd.add_option("--n", cfg.n_realizations, "realizations per horizon");
    cmd.add_option("--seed", cfg.seed, "ensemble seed");
    cmd.add_option("--delta", cfg.delta, "relative spatial step");
    cmd.add_option("--dt-max", cfg.dt_max, "maximum step (default t/1000)");
    cmd.add_option("--dt-min", cfg.dt_min, "minimum step");
    cmd.add_option("--bins", cfg.bins, "histogram bins");
    cmd.add_option("--out", cfg.out_dir, "output directory");
}

}  // namespace

int cmd_simulate(const RunConfig& config, unsigned threads, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        std::filesystem::create_directories(config.out_dir);
        const Geometry geometry = make_geometry(config);
        for (double t : config.t_list) {
            const auto samples = run_ensemble(make_sim_params(config, t), geometry, threads);
            const auto path = std::filesystem::path(config.out_dir) / sample_file_name(config.geometry, t);
            write_samples(path, config, t, samples);
            out << "wrote " << path.string() << "\n";
        }
    } catch (const IntegratorFailure& e) {
        err << "integrator failure (trajectory " << e.trajectory_index << "): " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    const bool compare_normalizers = config.beta == 0.0 && config.geometry != "annulus";
    std::vector<RunReport> runs;
    std::map<std::string, PdfCurve> curves;
    try {
        const LimitLaw law = validation_law(config);
        for (double t : config.t_list) {
            const auto path = std::filesystem::path(config.out_dir) / sample_file_name(config.geometry, t);
            if (!std::filesystem::exists(path)) {
                err << "warning: no samples for t=" << format_shortest(t) << " (" << path.string() << ")\n";
                continue;
            }
            const SampleFile file = read_samples(path);
            if (file.header.count("geometry") && file.header.at("geometry") != config.geometry) {
                err << "config error: " << path.string() << " holds geometry " << file.header.at("geometry")
                    << "\n";
                return kExitConfig;
            }
            RunReport run{validate(file.theta, law, t, config.bins), std::nullopt};
            if (compare_normalizers) run.uncorrected = validate(file.theta, validation_law(config, false), t, config.bins);
            runs.push_back(std::move(run));
        }
        if (runs.empty()) {
            err << "error: none of the requested t values has a sample file in " << config.out_dir << "\n";
            return kExitRuntime;
        }
        curves[law_name(law)] = sample_pdf(law, kPdfCurvePoints);

        const auto report_path = std::filesystem::path(config.out_dir) / "report.json";
        std::ofstream os(report_path, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + report_path.string());
        os << report_to_json(config, runs, curves);
        if (!os) throw std::runtime_error("write failed for " + report_path.string());
        out << "wrote " << report_path.string() << "\n";
    } catch (const NormalizerUndefined& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_pdf(const std::string& law_name_arg, double x_min, double x_max, std::size_t n_points, std::ostream& out,
            std::ostream& err) {
    const auto law = law_by_name(law_name_arg);
    if (!law) {
        err << "config error: unknown law '" << law_name_arg
            << "' (expected point, disk, annulus, point-free, disk-free)\n";
        return kExitConfig;
    }
    if (n_points < 2 || !(x_max > x_min)) {
        err << "config error: need n_points >= 2 and x_max > x_min\n";
        return kExitConfig;
    }
    out << "x,pdf\n";
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(n_points - 1);
        out << format_17g(x) << "," << format_17g(pdf(*law, x)) << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const std::string& kind, const OracleArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (kind == "order") {
            const auto k = complex_order(args.mu, args.beta);
            char buf[96];
            std::snprintf(buf, sizeof buf, "%.15g%+.15gi", k.real() + 0.0, k.imag() + 0.0);
            out << buf << "\n";
        } else if (kind == "point-quad") {
            out << format_15g(point_density_quadrature(args.theta, args.t, args.r0, args.beta, args.quadrature))
                << "\n";
        } else if (kind == "disk-quad") {
            out << format_15g(
                       disk_density_quadrature(args.theta, args.t, args.r0, args.a, args.beta, args.quadrature))
                << "\n";
        } else if (kind == "eigenvalue") {
            out << format_15g(annulus_lead_eigenvalue(args.a, args.b, args.k)) << "\n";
        } else {
            err << "config error: unknown oracle '" << kind
                << "' (expected order, point-quad, disk-quad, eigenvalue)\n";
            return kExitConfig;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Winding-angle Monte Carlo and asymptotic law toolkit", "winding"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    unsigned threads = 0;
    try {
        if (auto path = find_config_path(argc, argv)) cfg = config_from_json_text(read_text(*path));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    auto* simulate = app.add_subcommand("simulate", "run ensembles and write sample CSVs");
    add_run_options(*simulate, cfg, config_path);
    simulate->add_option("--threads", threads, "worker threads (0 = auto); does not affect output");

    auto* validate_cmd = app.add_subcommand("validate", "compare sample CSVs to the limit law, write report.json");
    add_run_options(*validate_cmd, cfg, config_path);
    validate_cmd->add_option("--threads", threads, "accepted for symmetry with simulate");

    std::string law;
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n_points = 2;
    auto* pdf_cmd = app.add_subcommand("pdf", "print a limit-law density as CSV");
    pdf_cmd->add_option("--law", law, "point | disk | annulus | point-free | disk-free")->required();
    pdf_cmd->add_option("--x-min", x_min);
    pdf_cmd->add_option("--x-max", x_max);
    pdf_cmd->add_option("--n-points", n_points);

    std::string kind;
    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "evaluate a numerical oracle");
    oracle->add_option("kind", kind, "order | point-quad | disk-quad | eigenvalue")->required();
    oracle->add_option("--mu", oracle_args.mu);
    oracle->add_option("--beta", oracle_args.beta);
    oracle->add_option("--theta", oracle_args.theta);
    oracle->add_option("--t", oracle_args.t);
    oracle->add_option("--r0", oracle_args.r0);
    oracle->add_option("--a", oracle_args.a);
    oracle->add_option("--b", oracle_args.b);
    oracle->add_option("--k", oracle_args.k);
    oracle->add_option("--abs-tol", oracle_args.quadrature.abs_tol);
    oracle->add_option("--rel-tol", oracle_args.quadrature.rel_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*simulate) return cmd_simulate(cfg, threads, out, err);
    if (*validate_cmd) return cmd_validate(cfg, out, err);
    if (*pdf_cmd) return cmd_pdf(law, x_min, x_max, n_points, out, err);
    if (*oracle) return cmd_oracle(kind, oracle_args, out, err);
    return kExitConfig;
}

}  // namespace winding
