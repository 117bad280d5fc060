#pragma once

// Exact rational time values backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtlsample {

using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline BigInt floor_of(const Rat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const Rat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

inline std::int64_t to_int64(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("not an integer: " + q.get_str());
  return to_int64(BigInt(q.get_num()));
}

/// Prints `n` for integers and `n/d` otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat midpoint(const Rat& a, const Rat& b) {
  Rat m = (a + b) / 2;
  return m;
}

/// Parses `n`, `-n`, `n/d` or `-n/d`; decimal points are rejected.
inline std::optional<Rat> parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    const char c = text[j];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) return std::nullopt;
  std::string s(text[0] == '+' ? text.substr(1) : text);
  const auto slash = s.find('/');
  BigInt num(s.substr(0, slash));
  BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
  if (den == 0) return std::nullopt;
  return make_rat(num, den);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace mtlsample
