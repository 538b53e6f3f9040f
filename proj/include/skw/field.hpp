#pragma once

#include <cstdint>

#include "skw/errors.hpp"

namespace skw {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;   // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629ULL;    // 2^31 - 19
inline constexpr std::uint64_t kSolverPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Arithmetic in Z/p for a prime p < 2^62. Elements are kept in [0, p).
class PrimeField {
 public:
  explicit constexpr PrimeField(std::uint64_t p) : p_(p) {}

  constexpr std::uint64_t prime() const { return p_; }

  std::uint64_t reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (p_ == kSolverPrime) {
      const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
      std::uint64_t r = (static_cast<std::uint64_t>(x) & kSolverPrime) + static_cast<std::uint64_t>(x >> 61);
      r = (r & kSolverPrime) + (r >> 61);
      return r >= kSolverPrime ? r - kSolverPrime : r;
    }
    if (p_ < (1ULL << 32)) return (a * b) % p_;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw Error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }
  /// Representative in (-p/2, p/2].
  std::int64_t lift(std::uint64_t a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

 private:
  std::uint64_t p_;
};

/// Overflow-checked int64 helpers; coefficients here stay small, so an
/// overflow means a bug or an out-of-range input.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

}  // namespace skw
