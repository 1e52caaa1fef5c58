#pragma once

#include <cstdint>
#include <random>

#include "opineq/sym_matrix.hpp"

namespace opineq {

/// Deterministic random source. All distributions are generated by fixed
/// in-house recipes (53-bit uniforms, Box-Muller normals) rather than the
/// standard-library distribution objects, whose output is not pinned down
/// across standard library implementations. Identical seeds therefore give
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; caches the paired deviate.
  double normal();

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Mixes (root, stream, counter) into an independent child seed so that
/// per-trial generators never share state and insertion order of trials
/// does not matter.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                          std::uint64_t counter);

/// G^T G for a rank x dim standard Gaussian G: PSD with the given rank
/// (almost surely). rank must be in [1, dim].
SymMatrix random_psd(int dim, int rank, Rng& rng);

/// random_psd(dim, dim) + min_eig * I: strictly positive definite.
SymMatrix random_spd(int dim, double min_eig, Rng& rng);

/// Haar-ish orthogonal matrix via Gram-Schmidt on a Gaussian matrix.
DenseMatrix random_orthogonal(int dim, Rng& rng);

}  // namespace opineq
