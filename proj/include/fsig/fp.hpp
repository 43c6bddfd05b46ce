#pragma once
#include <cstdint>

#include "fsig/errors.hpp"

namespace fsig {

// Arithmetic in the prime field F_p.  Elements are canonical residues in [0, p).
// Supported characteristics are the primes up to 97; everything downstream
// assumes a perfect prime field, so coefficients are fixed by every Frobenius.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > 97 || !is_prime(p))
      throw usage_error("characteristic must be a prime in [2, 97], got " +
                        std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t r = 1, base = a % p_;
    while (n) {
      if (n & 1) r = mul(r, base);
      base = mul(base, base);
      n >>= 1;
    }
    return r;
  }

  // Multiplicative inverse; the zero element has none.
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw usage_error("division by zero in F_" + std::to_string(p_));
    return pow(a % p_, p_ - 2);  // Fermat: a^(p-2) * a = a^(p-1) = 1
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace fsig
