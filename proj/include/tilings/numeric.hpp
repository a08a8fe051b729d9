#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tilings {

// Exact arithmetic backends. Coordinates inside tilings use a scaled-int64
// fast path; BigInt/Rational carry everything that may outgrow 64 bits
// (tile counts, volumes, aspect statistics).
using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a requested construction would exceed the configured
// tile-count budget. Refusal happens before allocation.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when exact scaled-integer coordinates would leave the int64 range.
class coordinate_overflow : public std::runtime_error {
 public:
  explicit coordinate_overflow(const std::string& what)
      : std::runtime_error(what) {}
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN)
    throw coordinate_overflow("int64 overflow in exact coordinate arithmetic");
  return static_cast<std::int64_t>(p);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  __int128 s = static_cast<__int128>(a) + b;
  if (s > INT64_MAX || s < INT64_MIN)
    throw coordinate_overflow("int64 overflow in exact coordinate arithmetic");
  return static_cast<std::int64_t>(s);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b);
}

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// floor(num/den) for den > 0.
inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline bool fits_int64(const BigInt& v) {
  return v >= BigInt(static_cast<long>(INT64_MIN)) &&
         v <= BigInt(static_cast<long>(INT64_MAX));
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw coordinate_overflow("BigInt does not fit int64");
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace tilings
