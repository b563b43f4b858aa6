#include "opdisk/rng.hpp"

#include <cmath>

namespace opdisk {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix64(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double SplitMix64::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  cached_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

Complex SplitMix64::cnormal() {
  return Complex(normal(), normal()) * M_SQRT1_2;
}

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed ^ mix64(index + kGamma)));
}

ComplexMatrix random_gaussian(SplitMix64& rng, Index n) {
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m(i, j) = rng.cnormal();
    }
  }
  return m;
}

ComplexMatrix random_hermitian(SplitMix64& rng, Index n) {
  const ComplexMatrix g = random_gaussian(rng, n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(SplitMix64& rng, Index n) {
  const ComplexMatrix g = random_gaussian(rng, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

ComplexMatrix random_invertible(SplitMix64& rng, Index n, double max_cond) {
  const double half_log = 0.5 * std::log(max_cond);
  RealVector s(n);
  for (Index i = 0; i < n; ++i) {
    s[i] = std::exp(rng.uniform(-half_log, half_log));
  }
  return random_unitary(rng, n) * s.asDiagonal() * random_unitary(rng, n).adjoint();
}

ComplexMatrix random_antihermitian(SplitMix64& rng, Index n) {
  const ComplexMatrix h = random_hermitian(rng, n);
  const double norm = op_norm(h);
  const ComplexMatrix x = Complex(0, 1) * h;
  return norm > 1.0 ? ComplexMatrix(x / norm) : x;
}

DiskPoint random_disk_point(SplitMix64& rng, Index n, double norm_cap,
                            const Tolerances& tol) {
  for (;;) {
    const ComplexMatrix g = random_gaussian(rng, n);
    const double norm = op_norm(g);
    if (norm <= tol.eps_rank) continue;  // essentially impossible
    const double target = norm_cap * (1.0 - rng.uniform());  // (0, norm_cap]
    return DiskPoint(g * (target / norm), tol);
  }
}

DiskPoint random_diagonal_disk_point(SplitMix64& rng, Index n, double norm_cap,
                                     const Tolerances& tol) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const double r = norm_cap * (1.0 - rng.uniform());
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    m(i, i) = Complex(r * std::cos(phi), r * std::sin(phi));
  }
  return DiskPoint(std::move(m), tol);
}

DiskPoint random_invertible_disk_point(SplitMix64& rng, Index n, double norm_cap,
                                       const Tolerances& tol) {
  for (;;) {
    const DiskPoint z = random_disk_point(rng, n, norm_cap, tol);
    if (min_singular_value(z.mat()) > 0.05 * norm_cap) return z;
  }
}

BlockMatrix random_theta_unitary(SplitMix64& rng, Index n, const Tolerances& tol) {
  const BorelParams p(random_invertible(rng, n), random_antihermitian(rng, n), tol);
  return borel_element(p, tol) *
         BlockMatrix::diag(random_unitary(rng, n), random_unitary(rng, n));
}

}  // namespace opdisk
