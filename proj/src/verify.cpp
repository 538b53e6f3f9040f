#include "skw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "skw/analysis.hpp"
#include "skw/errors.hpp"
#include "skw/linalg.hpp"
#include "skw/schur_complex.hpp"
#include "skw/tableau.hpp"

namespace skw {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// kDefaultPrime, kSecondPrime, then primes below kSecondPrime.
std::uint64_t nth_prime(int i) {
  static std::vector<std::uint64_t> primes{kDefaultPrime, kSecondPrime};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (static_cast<int>(primes.size()) <= i) {
    std::uint64_t p = primes.back() - 2;
    while (!is_prime(p)) p -= 2;
    primes.push_back(p);
  }
  return primes[i];
}

constexpr int kMaxPrimes = 6;

}  // namespace

int rank_exact(const IntSparse& m) {
  if (m.is_zero()) return 0;
  std::vector<int> ranks;
  for (int i = 0; i < kMaxPrimes; ++i) {
    ranks.push_back(rank_mod_p(m, nth_prime(i)));
    if (i == 0) continue;
    // rank mod p never exceeds the rational rank; trust the largest value once seen twice
    const int top = *std::max_element(ranks.begin(), ranks.end());
    if (std::count(ranks.begin(), ranks.end(), top) >= 2) return top;
  }
  throw PrimeCollisionError("modular ranks never agreed across " + std::to_string(kMaxPrimes) + " primes");
}

int rank_exact(const ModSparse& m) { return rank_mod_p(m); }

int rank_exact(const IntMatrix& m) { return rank_exact(to_sparse(m)); }

namespace {

template <typename C>
std::vector<int> homology_from_ranks(const C& c) {
  std::vector<int> drank(c.top() + 2, 0);
  for (int n = 1; n <= c.top(); ++n) drank[n] = rank_exact(c.d(n));
  std::vector<int> h;
  for (int n = 0; n <= c.top(); ++n) h.push_back(c.rank(n) - drank[n] - drank[n + 1]);
  return h;
}

}  // namespace

std::vector<int> homology_dims(const ModComplex& c) {
  if (auto bad = square_defects(c); !bad.empty())
    throw NotAComplexError("d_" + std::to_string(bad[0] - 1) + " * d_" + std::to_string(bad[0]) + " != 0");
  return homology_from_ranks(c);
}

std::vector<int> homology_dims(const IntComplex& c) {
  if (auto bad = square_defects(c); !bad.empty())
    throw NotAComplexError("d_" + std::to_string(bad[0] - 1) + " * d_" + std::to_string(bad[0]) + " != 0");
  return homology_from_ranks(c);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  // rejection keeps the draw uniform and platform-independent
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

ModMatrix random_invertible(int n, std::uint64_t prime, Rng& rng) {
  while (true) {
    ModMatrix a(n, n);
    std::vector<ModSparse::Entry> entries;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a(r, c) = rng.below(prime);
        entries.push_back({r, c, a(r, c)});
      }
    if (rank_mod_p(ModSparse::from_entries(n, n, std::move(entries), prime)) == n) return a;
  }
}

}  // namespace

ModMatrix random_rank_matrix(int g, int f, int rho, std::uint64_t prime, std::uint64_t seed, std::uint64_t stream) {
  if (rho < 0 || rho > std::min(f, g)) throw DimensionError("rank must lie in [0, min(f, g)]");
  Rng rng(seed, stream);
  const PrimeField field(prime);
  const ModMatrix a = random_invertible(g, prime, rng);
  const ModMatrix b = random_invertible(f, prime, rng);
  ModMatrix out(g, f);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < f; ++c) {
      std::uint64_t v = 0;
      for (int k = 0; k < rho; ++k) v = field.add(v, field.mul(a(r, k), b(k, c)));
      out(r, c) = v;
    }
  return out;
}

IntMatrix random_full_rank_matrix(int g, int f, std::uint64_t seed, std::uint64_t stream, int lo, int hi) {
  Rng rng(seed, stream);
  while (true) {
    IntMatrix m(g, f);
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < f; ++c) m(r, c) = rng.between(lo, hi);
    if (rank_exact(m) == std::min(f, g)) return m;
  }
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t prime) {
  const PrimeField field(prime);
  ModMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = field.reduce(m(r, c));
  return out;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "1";
  j["check"] = check;
  j["instance"] = instance;
  j["seed"] = seed;
  j["trials"] = trials;
  j["outcome"] = pass ? "pass" : "fail";
  j["failure_bound"] = failure_bound;
  j["counterexample"] = counterexample;
  j["details"] = details;
  return j;
}

std::string instance_name(const SkewShape& shape, int f, int g) {
  return shape.to_string() + " f=" + std::to_string(f) + " g=" + std::to_string(g);
}

namespace {

VerificationReport new_report(std::string check, std::string instance, std::uint64_t seed, int trials) {
  VerificationReport r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.seed = seed;
  r.trials = trials;
  return r;
}

std::uint64_t stream_id(int rho, int trial) { return (static_cast<std::uint64_t>(rho) << 32) | trial; }

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

const SchurComplex& use_or_build(const SchurComplex* prebuilt, std::optional<SchurComplex>& own, const SkewShape& shape,
                                 int f, int g) {
  if (prebuilt) {
    if (!(prebuilt->shape == shape) || prebuilt->f != f || prebuilt->g != g)
      throw DimensionError("prebuilt complex does not match the instance");
    return *prebuilt;
  }
  own = build_generic(shape, f, g);
  return *own;
}

}  // namespace

VerificationReport check_radical_profile(const SkewShape& shape, int f, int g, std::uint64_t prime, int trials,
                                         std::uint64_t seed, const SchurComplex* prebuilt) {
  auto rep = new_report("radical", instance_name(shape, f, g), seed, trials);
  const RadicalProfile profile = radical_profile(shape, f, g);
  std::optional<SchurComplex> own;
  const SchurComplex& c = use_or_build(prebuilt, own, shape, f, g);
  std::vector<std::int64_t> ranks(c.complex.ranks().begin(), c.complex.ranks().end());
  const auto r = expected_ranks(ranks);
  auto prof = nlohmann::ordered_json::array();
  for (const auto& e : profile.entries) prof.push_back(e.to_string());
  rep.details["profile"] = prof;
  rep.details["expected_ranks"] = r;
  rep.details["prime"] = prime;
  int tests = 0;
  for (int rho = 0; rho <= std::min(f, g) && rep.pass; ++rho) {
    for (int trial = 0; trial < trials && rep.pass; ++trial) {
      const auto phi = random_rank_matrix(g, f, rho, prime, seed, stream_id(rho, trial));
      const ModComplex s = specialize(c.complex, phi, prime);
      for (int n = 1; n <= c.complex.top(); ++n) {
        const int rk = rank_mod_p(s.d(n));
        const std::int64_t rn = r[n - 1];
        const bool deficient = rk < rn;
        const ProfileEntry& e = profile.at(n);
        bool ok = true;
        switch (e.kind) {
          case ProfileEntry::Kind::UnitIdeal: ok = !deficient; break;
          case ProfileEntry::Kind::MinorSize: ok = deficient == (rho < e.t); break;
          case ProfileEntry::Kind::ZeroIdeal: ok = rn > 0 && deficient; break;
          case ProfileEntry::Kind::ContainsMaxMinors: ok = !deficient || rho < g; break;
        }
        ++tests;
        // a full-rank prediction fails by bad luck only if an r_n-minor, of
        // degree 2 r_n in the random entries, vanishes (Schwartz-Zippel)
        const bool full_predicted = e.kind == ProfileEntry::Kind::UnitIdeal ||
                                    (e.kind == ProfileEntry::Kind::MinorSize && rho >= e.t);
        if (full_predicted) rep.failure_bound += 2.0 * static_cast<double>(rn) / static_cast<double>(prime);
        if (!ok) {
          rep.pass = false;
          rep.counterexample = {{"n", n}, {"rho", rho}, {"trial", trial}, {"stream", stream_id(rho, trial)},
                                {"rank", rk}, {"expected_rank", rn}, {"prediction", e.to_string()}};
          break;
        }
      }
    }
  }
  rep.details["tests"] = tests;
  return rep;
}

VerificationReport check_nonzero_differential(const SkewShape& shape, int f, int g, const SchurComplex* prebuilt) {
  auto rep = new_report("nonzero-diff", instance_name(shape, f, g), 0, 1);
  const auto bounds = component_bounds(shape, f, g);
  if (!bounds) {
    rep.details["note"] = "zero complex (T < 0)";
    return rep;
  }
  if (f < 1 || g < 1) {
    rep.details["note"] = "no specialization x1 -> yg without both F and G";
    return rep;
  }
  std::optional<SchurComplex> own;
  const SchurComplex& c = use_or_build(prebuilt, own, shape, f, g);
  IntMatrix psi(g, f);
  psi(g - 1, 0) = 1;
  const IntComplex s = specialize(c.complex, psi);
  const auto [start, finish] = *bounds;
  rep.details["start"] = start;
  rep.details["finish"] = finish;
  auto nonzero = nlohmann::ordered_json::array();
  for (int j = 1; j <= s.top(); ++j) {
    const bool nz = !s.d(j).is_zero();
    nonzero.push_back(nz);
    const bool want = start < j && j <= finish;
    if (j <= start && nz) {
      rep.pass = false;
      rep.counterexample = {{"degree", j}, {"issue", "nonzero below start"}};
    }
    if (want && !nz && rep.pass) {
      rep.pass = false;
      rep.counterexample = {{"degree", j}, {"issue", "zero differential"}};
    }
  }
  rep.details["nonzero"] = nonzero;
  return rep;
}

VerificationReport check_epsilon(const IntMatrix& phi) {
  const int g = phi.rows();
  const int f = phi.cols();
  auto rep = new_report("epsilon", "f=" + std::to_string(f) + " g=" + std::to_string(g), 0, 1);
  rep.details["phi"] = matrix_json(phi);
  if (rank_exact(phi) != f) throw HypothesisViolatedError("phi must have full column rank");
  const IntMatrix e = epsilon_matrix(phi);
  const IntSparse composite = multiply(to_sparse(phi.transpose()), to_sparse(e));
  const int rank_eps = rank_exact(to_sparse(e));
  rep.details["epsilon"] = matrix_json(e);
  rep.details["rank_epsilon"] = rank_eps;
  if (!composite.is_zero()) {
    rep.pass = false;
    rep.counterexample = {{"issue", "phi^T * epsilon != 0"}, {"product", matrix_json(to_dense(composite))}};
  } else if (rank_eps != g - f) {
    rep.pass = false;
    rep.counterexample = {{"issue", "kernel of epsilon^* has the wrong dimension"}, {"rank", rank_eps}};
  }
  return rep;
}

VerificationReport check_h1_tilde(const SkewShape& shape, const IntMatrix& phi, const SchurComplex* prebuilt) {
  const int g = phi.rows();
  const int f = phi.cols();
  auto rep = new_report("tilde", instance_name(shape, f, g), 0, 1);
  rep.details["phi"] = matrix_json(phi);
  std::optional<SchurComplex> own;
  const SchurComplex& c = use_or_build(prebuilt, own, shape, f, g);
  const IntComplex tilde = build_tilde(c, phi);
  const auto h = homology_dims(tilde);
  rep.details["ranks"] = tilde.ranks();
  rep.details["homology"] = h;
  if (h.size() > 1 && h[1] != 0) {
    rep.pass = false;
    rep.counterexample = {{"H1", h[1]}};
  }
  return rep;
}

VerificationReport check_homology(const SkewShape& shape, int f, int g, std::uint64_t prime, int trials,
                                  std::uint64_t seed, const SchurComplex* prebuilt) {
  auto rep = new_report("homology", instance_name(shape, f, g), seed, trials);
  std::optional<SchurComplex> own;
  const SchurComplex& c = use_or_build(prebuilt, own, shape, f, g);
  rep.details["prime"] = prime;
  for (int rho = 0; rho <= std::min(f, g) && rep.pass; ++rho) {
    const auto want64 = component_ranks(shape, f - rho, g - rho);
    const std::vector<int> want(want64.begin(), want64.end());
    for (int trial = 0; trial < trials; ++trial) {
      const auto phi = random_rank_matrix(g, f, rho, prime, seed, stream_id(rho, trial));
      const auto h = homology_dims(specialize(c.complex, phi, prime));
      if (h != want) {
        rep.pass = false;
        rep.counterexample = {{"rho", rho}, {"trial", trial}, {"homology", h}, {"expected", want}};
        break;
      }
    }
  }
  return rep;
}

VerificationReport check_h0_identification(const SkewShape& shape, int f, int g, int trials, std::uint64_t seed,
                                           const SchurComplex* prebuilt) {
  auto rep = new_report("h0", instance_name(shape, f, g), seed, trials);
  if (f >= g) throw DimensionError("H0 identification needs f < g");
  std::optional<SchurComplex> own;
  const SchurComplex& c = use_or_build(prebuilt, own, shape, f, g);
  std::vector<int> want(c.complex.top() + 1, 0);
  want[0] = static_cast<int>(count_semistandard(shape, g - f, Convention::Schur));
  rep.details["expected"] = want;
  for (int trial = 0; trial < trials; ++trial) {
    const IntMatrix phi = random_full_rank_matrix(g, f, seed, trial);
    const auto h = homology_dims(specialize(c.complex, phi));
    if (h != want) {
      rep.pass = false;
      rep.counterexample = {{"trial", trial}, {"phi", matrix_json(phi)}, {"homology", h}};
      break;
    }
  }
  return rep;
}

int thread_count() {
  if (const char* env = std::getenv("SKW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace skw
