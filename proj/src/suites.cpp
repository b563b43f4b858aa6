#include "opdisk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

#include "opdisk/rng.hpp"

namespace opdisk {

void RunConfig::validate() const {
  if (dim < 1 || dim > 64) throw ConfigError("dim must lie in [1, 64]");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (!(norm_cap > 0.0 && norm_cap < 1.0)) throw ConfigError("norm_cap must lie in (0, 1)");
  if (!(tol.eps_rank > 0.0 && tol.eps_rank < 1.0) ||
      !(tol.eps_check > 0.0 && tol.eps_check < 1.0)) {
    throw ConfigError("tolerances must lie in (0, 1)");
  }
}

Json Report::to_json() const {
  return Json{{"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"residuals", residuals},
              {"max_residual", max_residual},
              {"elapsed_ms", elapsed_ms}};
}

bool Report::passed(const Tolerances& tol) const {
  return std::isfinite(max_residual) && max_residual <= tol.eps_check;
}

namespace {

// One random instance of a suite: draws inputs from the stream, optionally
// records them into `capture`, and returns the instance residual.
using Instance = std::function<double(const RunConfig&, std::uint64_t, Json*)>;

void capture_put(Json* capture, const char* key, Json value) {
  if (capture != nullptr) (*capture)[key] = std::move(value);
}

double instance_el_teo(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const DiskPoint z = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "z", matrix_to_json(z.mat()));
  return verify_el_teo(z, cfg.tol);
}

double instance_el_coro(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const DiskPoint z0 = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  const DiskPoint z1 = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "z0", matrix_to_json(z0.mat()));
  capture_put(capture, "z1", matrix_to_json(z1.mat()));
  return verify_coro(z0, z1, cfg.tol);
}

double instance_invariance(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const BlockMatrix g = random_theta_unitary(rng, cfg.dim, cfg.tol);
  const DiskPoint z1 = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  const DiskPoint z2 = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "g", block_to_json(g));
  capture_put(capture, "z1", matrix_to_json(z1.mat()));
  capture_put(capture, "z2", matrix_to_json(z2.mat()));
  const double before = dist(z1, z2, cfg.tol);
  const double after = dist(mobius(g, z1, cfg.tol), mobius(g, z2, cfg.tol), cfg.tol);
  return std::abs(after - before);
}

double instance_fibration(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const DiskPoint z = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  const BlockMatrix g = random_theta_unitary(rng, cfg.dim, cfg.tol);
  const ComplexMatrix u0 = random_unitary(rng, cfg.dim);
  capture_put(capture, "z", matrix_to_json(z.mat()));
  capture_put(capture, "g", block_to_json(g));
  capture_put(capture, "u", matrix_to_json(u0));

  const KPoint x = lift(z, cfg.tol);
  const double section = op_norm(project(x.pair(), cfg.tol).mat() - z.mat());
  const double equivariance = op_norm(project(g * x.pair(), cfg.tol).mat() -
                                      mobius(g, z, cfg.tol).mat());
  const double fiber = op_norm(theta(x.pair(), x.pair() * u0) - u0);

  const PairVector& xp = x.pair();
  const BlockMatrix p{xp.x1 * xp.x1.adjoint(), -xp.x1 * xp.x2.adjoint(),
                      xp.x2 * xp.x1.adjoint(), -xp.x2 * xp.x2.adjoint()};
  const double idem = block_norm(p * p - p);
  const BlockMatrix rho = BlockMatrix::rho(cfg.dim);
  const double sym = block_norm(rho * p.adjoint() * rho - p);
  const ComplexMatrix eps_dense =
      (rho * (p + p - BlockMatrix::identity(cfg.dim))).to_dense();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(eps_dense),
                                                  Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  const double positivity = min_eig > cfg.tol.eps_rank ? 0.0 : cfg.tol.eps_rank - min_eig;

  return std::max({section, equivariance, fiber, idem, sym, positivity});
}

double instance_commutative(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const DiskPoint z0 = random_diagonal_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  const DiskPoint z1 = random_diagonal_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "z0", matrix_to_json(z0.mat()));
  capture_put(capture, "z1", matrix_to_json(z1.mat()));
  return verify_commutative(z0, z1, cfg.tol);
}

BlockAlgebra tracial_algebra(Index dim) {
  if (dim < 2) return BlockAlgebra({1});
  const Index first = (dim + 1) / 2;
  return BlockAlgebra({first, dim - first});
}

DiskPoint random_block_disk_point(SplitMix64& rng, const BlockAlgebra& algebra,
                                  double norm_cap, const Tolerances& tol) {
  ComplexMatrix m = ComplexMatrix::Zero(algebra.total_dim(), algebra.total_dim());
  Index at = 0;
  for (Index d : algebra.block_dims) {
    m.block(at, at, d, d) = random_disk_point(rng, d, norm_cap, tol).mat();
    at += d;
  }
  return DiskPoint(std::move(m), tol);
}

double instance_tracial(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const BlockAlgebra algebra = tracial_algebra(cfg.dim);
  const DiskPoint z0 = random_block_disk_point(rng, algebra, cfg.norm_cap, cfg.tol);
  const DiskPoint z1 = random_block_disk_point(rng, algebra, cfg.norm_cap, cfg.tol);
  capture_put(capture, "z0", block_element_to_json(algebra, z0.mat()));
  capture_put(capture, "z1", block_element_to_json(algebra, z1.mat()));
  return verify_tracial(algebra, z0, z1, cfg.tol);
}

double instance_crossratio_set(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const DiskPoint z = random_invertible_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "z", matrix_to_json(z.mat()));
  const Endo direct = cr0(z, cfg.tol);
  const Endo solved = cross_ratio_set(geodesic_tuple(z, cfg.tol), cfg.tol, cfg.allow_nonunique);
  const double agreement = op_norm(solved.coefficient - direct.coefficient);
  const Index n = cfg.dim;
  const DiskPoint origin(ComplexMatrix::Zero(n, n), cfg.tol);
  const double law = std::abs(std::log(endo_norm(direct)) - 2.0 * dist(origin, z, cfg.tol));
  return std::max(agreement, law);
}

double instance_borel(const RunConfig& cfg, std::uint64_t index, Json* capture) {
  SplitMix64 rng = derive_stream(cfg.seed, index);
  const ComplexMatrix g = random_invertible(rng, cfg.dim);
  const ComplexMatrix x = random_antihermitian(rng, cfg.dim);
  const DiskPoint z = random_disk_point(rng, cfg.dim, cfg.norm_cap, cfg.tol);
  capture_put(capture, "g", matrix_to_json(g));
  capture_put(capture, "x", matrix_to_json(x));
  capture_put(capture, "z", matrix_to_json(z.mat()));

  const BorelParams params(g, x, cfg.tol);
  const BlockMatrix b = borel_element(params, cfg.tol);
  const BorelParams rec = borel_factor(b, cfg.tol);
  const double roundtrip = std::max(op_norm(rec.g - g), op_norm(rec.x - x));

  const BlockMatrix rho = BlockMatrix::rho(cfg.dim);
  const double membership = block_norm(b.adjoint() * rho * b - rho);

  const BlockMatrix gz = g_z(z, cfg.tol);
  const double unit_defect = block_norm(gz.adjoint() * rho * gz - rho);
  const Index n = cfg.dim;
  const DiskPoint origin(ComplexMatrix::Zero(n, n), cfg.tol);
  const double moves_origin = op_norm(mobius(gz, origin, cfg.tol).mat() - z.mat());

  return std::max({roundtrip, membership, unit_defect, moves_origin});
}

struct Suite {
  const char* name;
  Instance instance;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"el_teo", instance_el_teo},
      {"el_coro", instance_el_coro},
      {"invariance", instance_invariance},
      {"fibration", instance_fibration},
      {"commutative", instance_commutative},
      {"tracial", instance_tracial},
      {"crossratio_set", instance_crossratio_set},
      {"borel", instance_borel},
  };
  return all;
}

int thread_count(int samples) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("OPDISK_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) {
      n = static_cast<int>(std::min<long>(parsed, 1024));
    }
  }
  return std::max(1, std::min(n, samples));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const Suite& s) { return name == s.name; });
  if (it == all.end()) {
    throw ConfigError("unknown suite '" + name + "'");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> residuals(static_cast<std::size_t>(cfg.samples),
                                std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errors(static_cast<std::size_t>(cfg.samples));
  const int workers = thread_count(cfg.samples);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < cfg.samples; i += workers) {
        try {
          residuals[static_cast<std::size_t>(i)] =
              it->instance(cfg, static_cast<std::uint64_t>(i), nullptr);
        } catch (const std::exception& e) {
          errors[static_cast<std::size_t>(i)] = e.what();
          residuals[static_cast<std::size_t>(i)] = std::numeric_limits<double>::infinity();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();

  Report report;
  report.command = "verify";
  report.inputs = Json{{"suite", name},
                       {"dim", cfg.dim},
                       {"seed", cfg.seed},
                       {"samples", cfg.samples},
                       {"norm_cap", cfg.norm_cap},
                       {"eps_rank", cfg.tol.eps_rank},
                       {"eps_check", cfg.tol.eps_check},
                       {"allow_nonunique", cfg.allow_nonunique}};
  report.residuals = residuals;
  report.max_residual = 0.0;
  int worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    const double r = residuals[static_cast<std::size_t>(i)];
    if (!(r <= report.max_residual)) {  // NaN and larger values both land here
      report.max_residual = r;
      worst = i;
    }
  }
  report.outputs = Json{{"theorem", name},
                        {"n", cfg.dim},
                        {"samples", cfg.samples},
                        {"max_residual", report.max_residual}};
  if (report.passed(cfg.tol)) {
    report.outputs["status"] = "ok";
  } else {
    report.outputs["status"] = "fail";
    Json instance = Json{{"suite", name}, {"index", worst}, {"seed", cfg.seed}};
    try {
      it->instance(cfg, static_cast<std::uint64_t>(worst), &instance);
    } catch (const std::exception&) {
      // inputs recorded before the failing computation are kept
    }
    if (!errors[static_cast<std::size_t>(worst)].empty()) {
      instance["error"] = errors[static_cast<std::size_t>(worst)];
    }
    report.outputs["failing_instance"] = std::move(instance);
  }
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
          .count();
  return report;
}

}  // namespace opdisk
