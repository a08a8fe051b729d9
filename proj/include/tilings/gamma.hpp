#pragma once

#include <cstdint>
#include <vector>

#include "tilings/numeric.hpp"

namespace tilings {

// A finite sequence <g_1, ..., g_b> of positive integers. It drives the
// layered construction: layer i of the tiling is a g_i x ... x g_i grid slab.
class GammaSequence {
 public:
  explicit GammaSequence(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t length() const {
    return static_cast<std::int64_t>(entries_.size());
  }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  std::int64_t min_entry() const { return min_entry_; }
  std::int64_t max_entry() const { return max_entry_; }
  // lcm of all entries; exact, overflow-checked.
  std::int64_t lcm_entries() const;

  // g_1 == g_b
  bool boundary_equal() const { return boundary_equal_; }
  // g_1 == g_b == b == min(g)
  bool boundary_min() const { return boundary_min_; }
  // every adjacent ratio g_{i+1}/g_i or its inverse is an integer
  bool integral_ratios() const { return integral_ratios_; }

  bool operator==(const GammaSequence& o) const {
    return entries_ == o.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t min_entry_ = 0;
  std::int64_t max_entry_ = 0;
  bool boundary_equal_ = false;
  bool boundary_min_ = false;
  bool integral_ratios_ = false;
};

// Block-ordered elementwise products <g_i * g'_j>, the sequence of the tile
// product of the two layered tilings.
GammaSequence tensor(const GammaSequence& a, const GammaSequence& b);

// n-fold tensor power; n = 0 gives <1>.
GammaSequence tensor_power(const GammaSequence& g, int n);

// <b, tb, ..., tb, b> with b = h^(q(d-1)), t = h^(p-dq); requires p >= q*d
// and h >= 2. Always boundary-min with integral ratios.
GammaSequence gamma_pqh(int d, std::int64_t p, std::int64_t q, std::int64_t h);

// |g|^(d) = sum of g_i^(d-1): the tile count of the d-dimensional layered
// tiling. Multiplicative under tensor.
BigInt size_formula(const GammaSequence& g, int d);

// k^(d)(g) = log(|g|^(d)) / log(|g|), with the exact integer pair kept for
// reproducibility.
struct GrowthDegree {
  double value = 0.0;
  BigInt log_numerator;    // |g|^(d)
  BigInt log_denominator;  // |g| = b
};
GrowthDegree growth_degree(const GammaSequence& g, int d);

// s(d,k) = d-1 + (k-d)(1 - 1/(d-1)), the separator-size exponent tradeoff.
Rational s_tradeoff(int d, const Rational& k);
double s_tradeoff(int d, double k);

}  // namespace tilings
