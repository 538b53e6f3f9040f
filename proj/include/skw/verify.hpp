#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "skw/chain_complex.hpp"
#include "skw/matrix.hpp"
#include "skw/partition.hpp"

namespace skw {

struct SchurComplex;

/// Rank over the rationals: ranks mod 2^31-1 and 2^31-19 must agree. On
/// disagreement more primes are tried; throws PrimeCollisionError if no
/// value is seen twice among the largest ranks.
int rank_exact(const IntSparse& m);
/// Rank over the matrix's own prime field.
int rank_exact(const ModSparse& m);

/// dim H_j for every degree; throws NotAComplexError when d o d != 0.
std::vector<int> homology_dims(const ModComplex& c);
/// Homology over the rationals.
std::vector<int> homology_dims(const IntComplex& c);

/// Deterministic generator keyed by (seed, stream); streams are independent
/// so trials can be reordered or parallelized without changing results.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

using ModMatrix = DenseMatrix<std::uint64_t>;

/// A * D_rho * B mod p with A (g x g), B (f x f) uniformly random
/// invertible and D_rho the rank-rho 0/1 diagonal pattern.
ModMatrix random_rank_matrix(int g, int f, int rho, std::uint64_t prime, std::uint64_t seed,
                             std::uint64_t stream = 0);
/// Random integer g x f matrix with entries in [lo, hi] of rank min(f, g)
/// over the rationals (rejection sampling).
IntMatrix random_full_rank_matrix(int g, int f, std::uint64_t seed, std::uint64_t stream = 0, int lo = -3,
                                  int hi = 3);
ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t prime);
int rank_exact(const IntMatrix& m);

struct VerificationReport {
  std::string check;
  std::string instance;
  std::uint64_t seed = 0;
  int trials = 0;
  bool pass = true;
  /// Upper bound on the chance that a random choice hid a failure.
  double failure_bound = 0.0;
  nlohmann::ordered_json counterexample;  // null on pass
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

std::string instance_name(const SkewShape& shape, int f, int g);

/// For each n with a minor-size prediction t and each stratum rho of
/// rank rho matrices: rank d_n < r_n exactly when rho < t.
VerificationReport check_radical_profile(const SkewShape& shape, int f, int g, std::uint64_t prime, int trials,
                                         std::uint64_t seed, const SchurComplex* prebuilt = nullptr);
/// Specialization x_1 -> y_g, other x_i -> 0: d_j != 0 for start < j <= finish.
VerificationReport check_nonzero_differential(const SkewShape& shape, int f, int g,
                                              const SchurComplex* prebuilt = nullptr);
/// phi^T * epsilon = 0 and ker epsilon^* = im phi over the rationals.
VerificationReport check_epsilon(const IntMatrix& phi);
/// H_1 of the tilde complex vanishes.
VerificationReport check_h1_tilde(const SkewShape& shape, const IntMatrix& phi,
                                  const SchurComplex* prebuilt = nullptr);
/// Homology at random rank-rho points equals the component ranks for
/// (f - rho, g - rho), as predicted by splitting off an identity block.
VerificationReport check_homology(const SkewShape& shape, int f, int g, std::uint64_t prime, int trials,
                                  std::uint64_t seed, const SchurComplex* prebuilt = nullptr);
/// dim H_0 at full-rank integer points (f < g) is the Schur count for g - f,
/// higher homology vanishes.
VerificationReport check_h0_identification(const SkewShape& shape, int f, int g, int trials, std::uint64_t seed,
                                           const SchurComplex* prebuilt = nullptr);

/// Number of worker threads: SKW_THREADS if set and positive, else the
/// hardware concurrency.
int thread_count();
/// Runs fn(0) .. fn(count - 1) on up to thread_count() threads. Callers
/// write results by index, so output order never depends on scheduling.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace skw
