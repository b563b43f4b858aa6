// opdisk: command-line front end for the operator Poincare disk toolkit.
//
// Subcommands: distance, geodesic, crossratio, verify.  Exit codes:
//   0 success, 2 parse/validation error, 3 numerical failure, 4 internal.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opdisk/suites.hpp"

namespace od = opdisk;

namespace {

struct CommonOpts {
  od::Index dim = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  double eps_rank = 1e-10;
  double eps_check = 1e-8;
  double norm_cap = 0.9;
  bool allow_nonunique = false;
  std::string out;
  std::string format;  // empty = command default
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--dim", o.dim, "matrix dimension n for random instances");
  cmd->add_option("--seed", o.seed, "PRNG seed");
  cmd->add_option("--samples", o.samples, "number of random instances");
  cmd->add_option("--eps-check", o.eps_check, "identity-check tolerance");
  cmd->add_option("--eps-rank", o.eps_rank, "rank / invertibility threshold");
  cmd->add_option("--norm-cap", o.norm_cap, "operator-norm cap for random disk points");
  cmd->add_flag("--allow-nonunique", o.allow_nonunique,
                "accept the minimal-norm solution of rank-deficient cross-ratio systems");
  cmd->add_option("--out", o.out, "write the result to this file instead of stdout");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

od::Tolerances tolerances(const CommonOpts& o) {
  od::Tolerances tol;
  tol.eps_rank = o.eps_rank;
  tol.eps_check = o.eps_check;
  return tol;
}

std::string pick_format(const CommonOpts& o, const std::string& fallback) {
  return o.format.empty() ? fallback : o.format;
}

void emit(const std::string& text, const CommonOpts& o) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    od::save_text_file(o.out, text);
  }
}

// Emits the report and converts a failed residual gate into SuiteFailure so
// the exit-code mapping in main() sees it as a numerical failure.
int finish(const od::Report& report, const CommonOpts& o) {
  if (pick_format(o, "json") != "json") {
    throw od::ConfigError("csv output is only available for the geodesic command");
  }
  emit(report.to_json().dump(2) + "\n", o);
  if (!report.passed(tolerances(o))) {
    if (report.outputs.contains("failing_instance")) {
      std::cerr << report.outputs["failing_instance"].dump() << "\n";
    }
    std::ostringstream msg;
    msg << report.command << ": max residual " << std::setprecision(17)
        << report.max_residual << " exceeds eps_check " << o.eps_check;
    throw od::SuiteFailure(msg.str());
  }
  return 0;
}

od::DiskPoint load_point(const std::string& path, const od::Tolerances& tol) {
  return od::DiskPoint(od::load_matrix_file(path), tol);
}

int run_distance(const std::string& f1, const std::string& f2, const CommonOpts& o) {
  const od::Tolerances tol = tolerances(o);
  const od::DiskPoint z1 = load_point(f1, tol);
  const od::DiskPoint z2 = load_point(f2, tol);
  const double d = od::dist(z1, z2, tol);
  const od::ComplexMatrix w = od::translate_to_origin(z1, z2, tol);

  od::Report report;
  report.command = "distance";
  report.inputs = od::Json{{"z1", od::matrix_to_json(z1.mat())},
                           {"z2", od::matrix_to_json(z2.mat())},
                           {"eps_rank", tol.eps_rank},
                           {"eps_check", tol.eps_check}};
  report.outputs = od::Json{{"distance", d}, {"w", od::matrix_to_json(w)}};
  return finish(report, o);
}

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_row(const std::string& t_label, const od::ComplexMatrix& m) {
  std::ostringstream os;
  os << t_label;
  for (od::Index i = 0; i < m.rows(); ++i)
    for (od::Index j = 0; j < m.cols(); ++j) os << ',' << fmt_real(m(i, j).real());
  for (od::Index i = 0; i < m.rows(); ++i)
    for (od::Index j = 0; j < m.cols(); ++j) os << ',' << fmt_real(m(i, j).imag());
  os << '\n';
  return os.str();
}

int run_geodesic(const std::string& f0, const std::string& f1, double tmin, double tmax,
                 int steps, const CommonOpts& o) {
  if (steps < 2) throw od::ConfigError("geodesic needs at least 2 steps");
  const od::Tolerances tol = tolerances(o);
  const od::DiskPoint z0 = load_point(f0, tol);
  const od::DiskPoint z1 = load_point(f1, tol);
  // Throws CoincidentPoints for z0 = z1; a constant curve has no limits.
  const auto limits = od::limit_points(z0, z1, tol);
  const od::Geodesic curve = od::geodesic(z0, z1, tol);

  std::vector<double> ts(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    ts[static_cast<std::size_t>(k)] = tmin + (tmax - tmin) * k / (steps - 1);
  }

  if (pick_format(o, "csv") == "csv") {
    std::ostringstream os;
    os << 't';
    const od::Index n = z0.dim();
    for (od::Index i = 0; i < n; ++i)
      for (od::Index j = 0; j < n; ++j) os << ",re_" << i << '_' << j;
    for (od::Index i = 0; i < n; ++i)
      for (od::Index j = 0; j < n; ++j) os << ",im_" << i << '_' << j;
    os << '\n';
    os << csv_row("-inf", limits.first.mat());
    for (double t : ts) os << csv_row(fmt_real(t), curve.sample(t));
    os << csv_row("+inf", limits.second.mat());
    emit(os.str(), o);
    return 0;
  }

  od::Report report;
  report.command = "geodesic";
  report.inputs = od::Json{{"z0", od::matrix_to_json(z0.mat())},
                           {"z1", od::matrix_to_json(z1.mat())},
                           {"tmin", tmin},
                           {"tmax", tmax},
                           {"steps", steps},
                           {"eps_rank", tol.eps_rank},
                           {"eps_check", tol.eps_check}};
  od::Json samples = od::Json::array();
  for (double t : ts) {
    samples.push_back(od::Json{{"t", t}, {"z", od::matrix_to_json(curve.sample(t))}});
  }
  report.outputs = od::Json{{"limit_backward", od::matrix_to_json(limits.first.mat())},
                            {"limit_forward", od::matrix_to_json(limits.second.mat())},
                            {"samples", samples}};
  return finish(report, o);
}

int run_crossratio(const std::string& f0, const std::string& f1, const CommonOpts& o) {
  const od::Tolerances tol = tolerances(o);
  const od::DiskPoint z0 = load_point(f0, tol);
  const od::DiskPoint z1 = load_point(f1, tol);
  const od::Endo e = od::cr(z0, z1, tol);
  const double norm = od::endo_norm(e);
  const double d = od::dist(z0, z1, tol);
  const double residual = std::abs(std::log(norm) - 2.0 * d);

  od::Report report;
  report.command = "crossratio";
  report.inputs = od::Json{{"z0", od::matrix_to_json(z0.mat())},
                           {"z1", od::matrix_to_json(z1.mat())},
                           {"eps_rank", tol.eps_rank},
                           {"eps_check", tol.eps_check}};
  report.outputs = od::Json{{"coefficient", od::matrix_to_json(e.coefficient)},
                            {"endo_norm", norm},
                            {"distance", d},
                            {"log_norm_residual", residual}};
  report.residuals = {residual};
  report.max_residual = residual;
  return finish(report, o);
}

int run_verify(const std::string& suite, const CommonOpts& o) {
  od::RunConfig cfg;
  cfg.dim = o.dim;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.norm_cap = o.norm_cap;
  cfg.allow_nonunique = o.allow_nonunique;
  cfg.tol = tolerances(o);
  const od::Report report = od::run_suite(suite, cfg);
  return finish(report, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator Poincare disk: distances, geodesics, cross ratios, verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file_a, file_b, suite;
  double tmin = 0.0, tmax = 1.0;
  int steps = 11;

  CLI::App* cmd_distance =
      app.add_subcommand("distance", "invariant distance between two disk points");
  cmd_distance->add_option("z1", file_a, "JSON matrix file of the first point")->required();
  cmd_distance->add_option("z2", file_b, "JSON matrix file of the second point")->required();
  add_common(cmd_distance, opts);

  CLI::App* cmd_geodesic =
      app.add_subcommand("geodesic", "sample the geodesic through two disk points");
  cmd_geodesic->add_option("z0", file_a, "JSON matrix file of the point at t=0")->required();
  cmd_geodesic->add_option("z1", file_b, "JSON matrix file of the point at t=1")->required();
  cmd_geodesic->add_option("--tmin", tmin, "smallest sample parameter");
  cmd_geodesic->add_option("--tmax", tmax, "largest sample parameter");
  cmd_geodesic->add_option("--steps", steps, "number of samples (>= 2)");
  add_common(cmd_geodesic, opts);

  CLI::App* cmd_crossratio =
      app.add_subcommand("crossratio", "cross ratio of the geodesic configuration");
  cmd_crossratio->add_option("z0", file_a, "JSON matrix file of the first point")->required();
  cmd_crossratio->add_option("z1", file_b, "JSON matrix file of the second point")->required();
  add_common(cmd_crossratio, opts);

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a randomized verification suite");
  cmd_verify->add_option("suite", suite, "one of: el_teo, el_coro, invariance, fibration, "
                                         "commutative, tracial, crossratio_set, borel")
      ->required();
  add_common(cmd_verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_distance->parsed()) return run_distance(file_a, file_b, opts);
    if (cmd_geodesic->parsed()) return run_geodesic(file_a, file_b, tmin, tmax, steps, opts);
    if (cmd_crossratio->parsed()) return run_crossratio(file_a, file_b, opts);
    return run_verify(suite, opts);
  } catch (const od::SuiteFailure& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  } catch (const od::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
