#include "tilings/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tilings {

GammaSequence::GammaSequence(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("gamma sequence must be nonempty");
  for (std::int64_t v : entries_)
    if (v < 1) throw std::invalid_argument("gamma entries must be >= 1");

  min_entry_ = *std::min_element(entries_.begin(), entries_.end());
  max_entry_ = *std::max_element(entries_.begin(), entries_.end());
  boundary_equal_ = entries_.front() == entries_.back();
  boundary_min_ = boundary_equal_ && entries_.front() == length() &&
                  entries_.front() == min_entry_;
  integral_ratios_ = true;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    std::int64_t a = entries_[i], b = entries_[i + 1];
    if (a % b != 0 && b % a != 0) {
      integral_ratios_ = false;
      break;
    }
  }
}

std::int64_t GammaSequence::lcm_entries() const {
  std::int64_t l = 1;
  for (std::int64_t v : entries_) l = lcm64(l, v);
  return l;
}

GammaSequence tensor(const GammaSequence& a, const GammaSequence& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.entries().size() * b.entries().size());
  for (std::int64_t x : a.entries())
    for (std::int64_t y : b.entries()) out.push_back(checked_mul(x, y));
  return GammaSequence(std::move(out));
}

GammaSequence tensor_power(const GammaSequence& g, int n) {
  if (n < 0) throw std::invalid_argument("tensor power requires n >= 0");
  GammaSequence acc(std::vector<std::int64_t>{1});
  for (int i = 0; i < n; ++i) acc = tensor(acc, g);
  return acc;
}

GammaSequence gamma_pqh(int d, std::int64_t p, std::int64_t q,
                        std::int64_t h) {
  if (d < 2) throw std::invalid_argument("gamma_pqh requires d >= 2");
  if (p < 1 || q < 1) throw std::invalid_argument("gamma_pqh requires p,q >= 1");
  if (h < 2) throw std::invalid_argument("gamma_pqh requires h >= 2");
  if (p < q * d)
    throw std::invalid_argument("gamma_pqh requires p >= q*d (so t >= 1)");

  auto ipow = [](std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
  };
  std::int64_t b = ipow(h, q * (d - 1));
  std::int64_t t = ipow(h, p - d * q);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(b));
  out.push_back(b);
  std::int64_t mid = checked_mul(t, b);
  for (std::int64_t i = 0; i < b - 2; ++i) out.push_back(mid);
  if (b >= 2) out.push_back(b);
  return GammaSequence(std::move(out));
}

BigInt size_formula(const GammaSequence& g, int d) {
  if (d < 2) throw std::invalid_argument("size_formula requires d >= 2");
  BigInt total = 0;
  for (std::int64_t v : g.entries())
    total += bigint_pow(BigInt(static_cast<long>(v)),
                        static_cast<unsigned long>(d - 1));
  return total;
}

GrowthDegree growth_degree(const GammaSequence& g, int d) {
  if (g.length() < 2)
    throw std::invalid_argument("growth degree undefined for |gamma| = 1");
  GrowthDegree out;
  out.log_numerator = size_formula(g, d);
  out.log_denominator = BigInt(static_cast<long>(g.length()));
  // log via mantissa/exponent split so values beyond double range still work
  auto log_big = [](const BigInt& v) {
    signed long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
  };
  out.value = log_big(out.log_numerator) / log_big(out.log_denominator);
  return out;
}

Rational s_tradeoff(int d, const Rational& k) {
  if (d < 3) throw std::invalid_argument("s_tradeoff requires d >= 3");
  Rational dm1(d - 1);
  Rational kd = k - Rational(d);
  return dm1 + kd * (Rational(1) - Rational(1) / dm1);
}

double s_tradeoff(int d, double k) {
  if (d < 3) throw std::invalid_argument("s_tradeoff requires d >= 3");
  return (d - 1) + (k - d) * (1.0 - 1.0 / (d - 1));
}

}  // namespace tilings
