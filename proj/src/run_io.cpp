#include "winding/run_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "winding/errors.hpp"

namespace winding {

namespace {

std::string indent_str(int level) { return std::string(static_cast<std::size_t>(2 * level), ' '); }

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_17g(v);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

// Emits "key": value pairs separated by commas at one indentation level.
class ObjectWriter {
public:
    ObjectWriter(std::ostringstream& os, int level) : os_(os), level_(level) { os_ << "{"; }

    ObjectWriter& raw(const std::string& key, const std::string& value) {
        os_ << (first_ ? "\n" : ",\n") << indent_str(level_ + 1) << json_string(key) << ": " << value;
        first_ = false;
        return *this;
    }
    ObjectWriter& number(const std::string& key, double v) { return raw(key, json_number(v)); }
    ObjectWriter& integer(const std::string& key, std::uint64_t v) { return raw(key, std::to_string(v)); }
    ObjectWriter& string(const std::string& key, const std::string& v) { return raw(key, json_string(v)); }

    void close() { os_ << (first_ ? "}" : "\n" + indent_str(level_) + "}"); }

private:
    std::ostringstream& os_;
    int level_;
    bool first_ = true;
};

std::string report_fields_json(const ValidationReport& r, const std::optional<ValidationReport>& unc, int level) {
    std::ostringstream os;
    ObjectWriter w(os, level);
    w.string("geometry", r.geometry)
        .string("law", r.law)
        .number("beta", r.beta)
        .number("t", r.t)
        .integer("n_samples", r.n_samples)
        .number("normalizer_scale", r.normalizer_scale)
        .number("normalizer_shift", r.normalizer_shift)
        .number("l2_error", r.l2_error)
        .number("ks_distance", r.ks_distance)
        .number("sample_mean", r.sample_mean)
        .number("sample_variance", r.sample_variance)
        .number("sample_median", r.sample_median)
        .number("clipped_fraction", r.clipped_fraction)
        .integer("bins", r.bins)
        .number("range_low", r.range_low)
        .number("range_high", r.range_high);
    if (unc) {
        w.number("normalizer_scale_uncorrected", unc->normalizer_scale)
            .number("l2_error_uncorrected", unc->l2_error)
            .number("ks_distance_uncorrected", unc->ks_distance)
            .number("clipped_fraction_uncorrected", unc->clipped_fraction);
    }
    w.close();
    return os.str();
}

}  // namespace

std::string format_shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_17g(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Geometry make_geometry(const RunConfig& c) {
    if (c.geometry == "point") return Geometry::free_plane();
    if (c.geometry == "disk") return Geometry::disk_exterior(c.a);
    if (c.geometry == "annulus") return Geometry::annulus(c.a, c.b);
    throw ConfigError("unknown geometry '" + c.geometry + "' (expected point, disk or annulus)");
}

SimParams make_sim_params(const RunConfig& c, double t) {
    SimParams p = SimParams::with_defaults(c.beta, t, c.r0);
    p.delta = c.delta;
    if (c.dt_max) p.dt_max = *c.dt_max;
    p.dt_min = c.dt_min;
    p.n_realizations = c.n_realizations;
    p.seed = c.seed;
    return p;
}

void validate(const RunConfig& c) {
    const Geometry g = make_geometry(c);
    if (c.t_list.empty()) throw ConfigError("at least one --t is required");
    for (std::size_t i = 1; i < c.t_list.size(); ++i)
        if (!(c.t_list[i] > c.t_list[i - 1])) throw ConfigError("t values must be strictly increasing");
    if (c.bins < 1) throw ConfigError("bins must be >= 1");
    for (double t : c.t_list) validate(make_sim_params(c, t), g);
}

LimitLaw validation_law(const RunConfig& c, bool euler_corrected) {
    if (c.geometry == "annulus") return AnnulusGauss{c.beta, c.a, c.b};
    if (c.geometry == "point") {
        if (c.beta > 0.0) return PointVortex{c.beta, c.r0};
        return PointFree{c.r0, euler_corrected};
    }
    if (c.geometry == "disk") {
        if (c.beta > 0.0) return DiskVortex{c.beta, c.a};
        return DiskFree{c.a, euler_corrected};
    }
    throw ConfigError("unknown geometry '" + c.geometry + "'");
}

std::string sample_file_name(const std::string& geometry, double t) {
    // Integral horizons are spelled out (1e6 -> 1000000) to keep '+' out of file names.
    const bool integral = t == std::floor(t) && std::abs(t) < 1e15;
    const std::string label = integral ? std::to_string(static_cast<long long>(t)) : format_shortest(t);
    return "samples_" + geometry + "_" + label + ".csv";
}

void write_samples(const std::filesystem::path& path, const RunConfig& c, double t,
                   std::span<const WindingSample> samples) {
    const SimParams p = make_sim_params(c, t);
    std::ostringstream os;
    os << "# geometry=" << c.geometry << "\n"
       << "# a=" << format_shortest(c.a) << "\n"
       << "# b=" << format_shortest(c.b) << "\n"
       << "# beta=" << format_shortest(c.beta) << "\n"
       << "# r0=" << format_shortest(c.r0) << "\n"
       << "# t=" << format_shortest(t) << "\n"
       << "# n=" << samples.size() << "\n"
       << "# seed=" << c.seed << "\n"
       << "# delta=" << format_shortest(p.delta) << "\n"
       << "# dt_max=" << format_shortest(p.dt_max) << "\n"
       << "# dt_min=" << format_shortest(p.dt_min) << "\n"
       << "# schema=" << kSchemaVersion << "\n";
    for (const auto& s : samples) os << format_shortest(s.theta_final) << "\n";

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const std::string text = os.str();
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

SampleFile read_samples(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open sample file " + path.string());
    SampleFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto body = line.substr(line.find_first_not_of("# "));
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            file.header[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        double v = 0.0;
        const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
        if (res.ec != std::errc() || res.ptr != line.data() + line.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": not a number");
        file.theta.push_back(v);
    }
    if (auto it = file.header.find("n"); it != file.header.end() && std::stoull(it->second) != file.theta.size())
        throw std::runtime_error(path.string() + ": header n does not match the sample count");
    return file;
}

std::string config_to_json(const RunConfig& c, int level) {
    std::ostringstream os;
    ObjectWriter w(os, level);
    std::string ts = "[";
    for (std::size_t i = 0; i < c.t_list.size(); ++i) ts += (i ? ", " : "") + json_number(c.t_list[i]);
    ts += "]";
    w.string("geometry", c.geometry)
        .number("a", c.a)
        .number("b", c.b)
        .number("beta", c.beta)
        .number("r0", c.r0)
        .raw("t", ts)
        .integer("n", c.n_realizations)
        .integer("seed", c.seed)
        .number("delta", c.delta)
        .raw("dt_max", c.dt_max ? json_number(*c.dt_max) : "null")
        .number("dt_min", c.dt_min)
        .integer("bins", c.bins)
        .string("out", c.out_dir);
    w.close();
    return os.str();
}

RunConfig config_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    const nlohmann::json& j = doc.contains("config") ? doc.at("config") : doc;
    RunConfig c;
    try {
        if (j.contains("geometry")) c.geometry = j.at("geometry").get<std::string>();
        if (j.contains("a")) c.a = j.at("a").get<double>();
        if (j.contains("b")) c.b = j.at("b").get<double>();
        if (j.contains("beta")) c.beta = j.at("beta").get<double>();
        if (j.contains("r0")) c.r0 = j.at("r0").get<double>();
        if (j.contains("t")) c.t_list = j.at("t").get<std::vector<double>>();
        if (j.contains("n")) c.n_realizations = j.at("n").get<std::size_t>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("delta")) c.delta = j.at("delta").get<double>();
        if (j.contains("dt_max") && !j.at("dt_max").is_null()) c.dt_max = j.at("dt_max").get<double>();
        if (j.contains("dt_min")) c.dt_min = j.at("dt_min").get<double>();
        if (j.contains("bins")) c.bins = j.at("bins").get<std::size_t>();
        if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config field: ") + e.what());
    }
    return c;
}

std::string report_to_json(const RunConfig& config, std::span<const RunReport> runs,
                           const std::map<std::string, PdfCurve>& pdf_curves) {
    std::ostringstream os;
    ObjectWriter top(os, 0);
    top.integer("schema", kSchemaVersion);
    top.raw("config", config_to_json(config, 1));

    std::string runs_json = "[";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        runs_json += (i ? ",\n" : "\n") + indent_str(2) + report_fields_json(runs[i].report, runs[i].uncorrected, 2);
    }
    runs_json += runs.empty() ? "]" : "\n" + indent_str(1) + "]";
    top.raw("runs", runs_json);

    std::ostringstream curves;
    ObjectWriter cw(curves, 1);
    for (const auto& [name, curve] : pdf_curves) {
        std::string pts = "[";
        for (std::size_t i = 0; i < curve.size(); ++i)
            pts += (i ? ", " : "") + std::string("[") + json_number(curve[i].first) + ", " +
                   json_number(curve[i].second) + "]";
        pts += "]";
        cw.raw(name, pts);
    }
    cw.close();
    top.raw("pdf_curves", curves.str());
    top.close();
    return os.str() + "\n";
}

PdfCurve sample_pdf(const LimitLaw& law, std::size_t n_points) {
    const auto [low, high] = default_range(law);
    PdfCurve curve;
    curve.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = n_points == 1 ? low
                                       : low + (high - low) * static_cast<double>(i) /
                                                   static_cast<double>(n_points - 1);
        curve.emplace_back(x, pdf(law, x));
    }
    return curve;
}

}  // namespace winding
