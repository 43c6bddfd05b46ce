#pragma once
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

// Exact rational with 64-bit numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) == 1).  Comparisons cross-multiply in 128 bits
// so they never overflow.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
  explicit Rational(long long n) : num_(n), den_(1) {}

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Fixed four decimal places, for stable report output.
  std::string approx_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", approx());
    return std::string(buf);
  }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parse a nonnegative decimal literal like "0.001", "1e-3", or "1/8" into an
  // exact rational.  Used for thresholds supplied on the command line.
  static Rational parse_decimal(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
      long long n = parse_int(s.substr(0, slash));
      long long d = parse_int(s.substr(slash + 1));
      if (d == 0) throw usage_error("zero denominator in rational literal");
      return Rational(n, d);
    }
    std::size_t epos = s.find_first_of("eE");
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long long exp10 = epos == std::string::npos ? 0 : parse_int(s.substr(epos + 1));
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
    long long num = 0;
    long long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < mant.size(); ++i) {
      char c = mant[i];
      if (c == '.') {
        if (seen_dot) throw usage_error("malformed rational literal: " + s);
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        num = checked_scale(num, 10) + (c - '0');
        if (seen_dot) ++frac_digits;
        seen_digit = true;
      } else {
        throw usage_error("malformed rational literal: " + s);
      }
    }
    if (!seen_digit) throw usage_error("malformed rational literal: " + s);
    long long den = 1;
    long long net = exp10 - frac_digits;
    for (; net > 0; --net) num = checked_scale(num, 10);
    for (; net < 0; ++net) den = checked_scale(den, 10);
    return Rational(neg ? -num : num, den);
  }

 private:
  static long long parse_int(const std::string& s) {
    if (s.empty()) throw usage_error("malformed rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    if (i == s.size()) throw usage_error("malformed rational literal");
    long long v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw usage_error("malformed rational literal: " + s);
      v = checked_scale(v, 10) + (s[i] - '0');
    }
    return neg ? -v : v;
  }

  static long long checked_scale(long long v, long long k) {
    if (v > (0x7fffffffffffffffll - 9) / k)
      throw usage_error("rational literal out of range");
    return v * k;
  }

  void normalize() {
    if (den_ == 0) throw usage_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace fsig
