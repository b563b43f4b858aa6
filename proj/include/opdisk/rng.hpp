#pragma once

#include <cstdint>

#include "opdisk/disk.hpp"

namespace opdisk {

/// SplitMix64 generator (Steele, Lea & Flood): 64-bit state advanced by the
/// golden-gamma constant and finalized by two xor-shift multiplies.  Chosen
/// for trivial cross-language portability of the verification suites.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (pairs cached).
  double normal();
  /// Standard complex normal (unit total variance).
  Complex cnormal();

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Independent per-instance stream: hashes (seed, index) into a fresh
/// SplitMix64 state, so suite instances decouple and parallel order is moot.
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index);

ComplexMatrix random_gaussian(SplitMix64& rng, Index n);
ComplexMatrix random_hermitian(SplitMix64& rng, Index n);
/// Haar-distributed unitary (QR of a Gaussian with phase correction).
ComplexMatrix random_unitary(SplitMix64& rng, Index n);
/// Invertible with condition number at most max_cond (singular values
/// log-uniform in [1/sqrt(max_cond), sqrt(max_cond)]).
ComplexMatrix random_invertible(SplitMix64& rng, Index n, double max_cond = 10.0);
/// Anti-Hermitian with operator norm at most 1.
ComplexMatrix random_antihermitian(SplitMix64& rng, Index n);
/// Gaussian matrix rescaled so the operator norm is uniform in (0, norm_cap].
DiskPoint random_disk_point(SplitMix64& rng, Index n, double norm_cap,
                            const Tolerances& tol = {});
/// Diagonal disk point with entries uniform in the complex disk of radius norm_cap.
DiskPoint random_diagonal_disk_point(SplitMix64& rng, Index n, double norm_cap,
                                     const Tolerances& tol = {});
/// Invertible disk point: resampled until the smallest singular value clears
/// a fixed margin (0.05 norm_cap).
DiskPoint random_invertible_disk_point(SplitMix64& rng, Index n, double norm_cap,
                                       const Tolerances& tol = {});
/// Random theta isometry: triangular element (condition-bounded g, small x)
/// composed with a diagonal pair of Haar unitaries.
BlockMatrix random_theta_unitary(SplitMix64& rng, Index n, const Tolerances& tol = {});

}  // namespace opdisk
