#pragma once

#include <cmath>
#include <cstdint>

#include "tilings/numeric.hpp"

namespace tilings {

// Sphere geometry runs in quad precision (113-bit significand); construction
// self-checks at 1e-12 relative need the headroom over double.
using qreal = __float128;

inline qreal qabs(qreal x) { return x < 0 ? -x : x; }

inline qreal qsqrt(qreal a) {
  if (a < 0) throw std::invalid_argument("sqrt of negative");
  if (a == 0) return 0;
  // Newton from the double estimate; three steps reach quad precision
  qreal x = static_cast<qreal>(std::sqrt(static_cast<double>(a)));
  for (int i = 0; i < 3; ++i) x = (x + a / x) / 2;
  return x;
}

inline double to_double(qreal x) { return static_cast<double>(x); }

inline qreal to_qreal(const BigInt& v) {
  if (fits_int64(v)) return static_cast<qreal>(to_int64(v));
  // split into 32-bit chunks for exactness beyond int64
  BigInt a = v;
  bool neg = a < 0;
  if (neg) a = -a;
  qreal out = 0, scale = 1;
  const BigInt chunk = BigInt(1) << 32;
  while (a != 0) {
    BigInt rem = a % chunk;
    out += scale * static_cast<qreal>(rem.get_ui());
    a /= chunk;
    scale *= static_cast<qreal>(4294967296.0);
  }
  return neg ? -out : out;
}

inline qreal to_qreal(const Rational& r) {
  return to_qreal(BigInt(r.get_num())) / to_qreal(BigInt(r.get_den()));
}

}  // namespace tilings
