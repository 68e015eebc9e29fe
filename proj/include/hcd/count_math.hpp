#pragma once

#include <cstdint>
#include <stdexcept>

namespace hcd {

// Checked unsigned arithmetic for face counts and design sizes.

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace hcd
