#pragma once

// Command-line front end. Exit codes: 0 success, 2 configuration error,
// 3 runtime failure.
//
//   winding simulate --geometry point --beta 1 --r0 1 --t 100 --t 1e4 --n 10000 --out DIR
//   winding validate <same flags>            reads DIR/samples_*.csv, writes DIR/report.json
//   winding pdf --law disk --x-min 0 --x-max 5 --n-points 512
//   winding oracle eigenvalue --a 0.5 --b 2 --k 0.01

#include <ostream>
#include <string>

#include "winding/quadrature.hpp"
#include "winding/run_io.hpp"

namespace winding {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

int cmd_simulate(const RunConfig& config, unsigned threads, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pdf(const std::string& law, double x_min, double x_max, std::size_t n_points, std::ostream& out,
            std::ostream& err);

struct OracleArgs {
    double mu = 0.0;
    double beta = 0.0;
    double theta = 0.0;
    double t = 1e8;
    double r0 = 1.0;
    double a = 0.5;
    double b = 2.0;
    double k = 0.01;
    QuadratureSpec quadrature;
};

// kind: order | point-quad | disk-quad | eigenvalue
int cmd_oracle(const std::string& kind, const OracleArgs& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace winding
