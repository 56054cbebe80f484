#pragma once

// Batch run configuration and the on-disk artifacts shared with the plotting
// scripts:
//
//   samples_<geometry>_<t>.csv   t as an integer when integral; '#'-prefixed key=value header lines, then one
//                                winding angle per line in shortest round-trip
//                                decimal form.
//   report.json                  {"schema", "config", "runs", "pdf_curves"},
//                                floating-point numbers with 17 significant digits.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "winding/limit_laws.hpp"
#include "winding/sde.hpp"
#include "winding/stats.hpp"

namespace winding {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string geometry = "point";  // point | disk | annulus
    double a = 0.0;
    double b = 0.0;
    double beta = 0.0;
    double r0 = 1.0;
    std::vector<double> t_list;
    std::size_t n_realizations = 1000;
    std::uint64_t seed = 1;
    double delta = 0.05;
    std::optional<double> dt_max;  // unset: t / 1000 for each t
    double dt_min = 1e-12;
    std::size_t bins = 100;
    std::string out_dir = ".";
};

// Throws ConfigError for the first violated invariant, including those of
// the Geometry and SimParams built for every t.
void validate(const RunConfig& config);

Geometry make_geometry(const RunConfig& config);
SimParams make_sim_params(const RunConfig& config, double t);

// Law used to validate a run: the vortex laws for beta > 0, the free laws for
// beta = 0, the Gaussian law for any annulus run.
LimitLaw validation_law(const RunConfig& config, bool euler_corrected = true);

std::string format_shortest(double value);
std::string format_17g(double value);

std::string sample_file_name(const std::string& geometry, double t);

void write_samples(const std::filesystem::path& path, const RunConfig& config, double t,
                   std::span<const WindingSample> samples);

struct SampleFile {
    std::map<std::string, std::string> header;
    std::vector<double> theta;
};

// Throws std::runtime_error when the file is missing or malformed.
SampleFile read_samples(const std::filesystem::path& path);

struct RunReport {
    ValidationReport report;
    // Present for the beta = 0 point/disk runs: the same samples against the
    // normalizer without the e^gamma factor.
    std::optional<ValidationReport> uncorrected;
};

using PdfCurve = std::vector<std::pair<double, double>>;

std::string config_to_json(const RunConfig& config, int indent = 0);
// Accepts either a bare config object or a report.json carrying "config".
RunConfig config_from_json_text(const std::string& text);

std::string report_to_json(const RunConfig& config, std::span<const RunReport> runs,
                           const std::map<std::string, PdfCurve>& pdf_curves);

// `n_points` evenly spaced samples of the law's pdf over its default range.
PdfCurve sample_pdf(const LimitLaw& law, std::size_t n_points);

}  // namespace winding
