#include "tilings/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tilings {

namespace {

// Canonical comparison order: stacking axis first, then the grid axes.
std::vector<int> canonical_axis_order(int dim) {
  std::vector<int> order;
  order.reserve(dim);
  order.push_back(dim - 1);
  for (int a = 0; a + 1 < dim; ++a) order.push_back(a);
  return order;
}

}  // namespace

void Tiling::canonical_sort() {
  const std::size_t n = size();
  const auto order = canonical_axis_order(dim_);

  auto less = [&](std::size_t a, std::size_t b) {
    for (int ax : order) {
      if (lo(a, ax) != lo(b, ax)) return lo(a, ax) < lo(b, ax);
    }
    for (int ax : order) {
      if (len(a, ax) != len(b, ax)) return len(a, ax) < len(b, ax);
    }
    return false;
  };

  bool sorted = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (less(i + 1, i)) {
      sorted = false;
      break;
    }
  }
  if (sorted) return;

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), less);

  std::vector<std::int64_t> nlo(lo_.size()), nlen(len_.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < dim_; ++a) {
      nlo[i * dim_ + a] = lo_[perm[i] * dim_ + a];
      nlen[i * dim_ + a] = len_[perm[i] * dim_ + a];
    }
  }
  lo_ = std::move(nlo);
  len_ = std::move(nlen);
}

Tiling Tiling::from_scaled(int dim, std::vector<std::int64_t> den,
                           std::vector<std::int64_t> lo,
                           std::vector<std::int64_t> len,
                           std::optional<Provenance> prov) {
  if (dim < 1) throw std::invalid_argument("tiling dimension must be >= 1");
  if (den.size() != static_cast<std::size_t>(dim) ||
      lo.size() != len.size() || lo.size() % dim != 0)
    throw std::invalid_argument("inconsistent scaled tiling arrays");
  for (std::int64_t d : den)
    if (d <= 0) throw std::invalid_argument("denominators must be positive");
  for (std::size_t i = 0; i < len.size(); ++i) {
    if (len[i] <= 0) throw std::invalid_argument("tile side must be positive");
    checked_add(lo[i], len[i]);  // upper corner must be representable
  }

  Tiling t;
  t.dim_ = dim;
  t.den_ = std::move(den);
  t.lo_ = std::move(lo);
  t.len_ = std::move(len);
  t.prov_ = std::move(prov);
  t.canonical_sort();
  return t;
}

Tiling Tiling::from_rational_tiles(
    int dim, const std::vector<std::vector<Rational>>& corners,
    const std::vector<std::vector<Rational>>& sides) {
  if (corners.size() != sides.size())
    throw std::invalid_argument("corner/side count mismatch");
  const std::size_t n = corners.size();

  std::vector<std::int64_t> den(dim, 1);
  for (int a = 0; a < dim; ++a) {
    BigInt l = 1;
    for (std::size_t t = 0; t < n; ++t) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              corners[t].at(a).get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), sides[t].at(a).get_den_mpz_t());
    }
    if (!fits_int64(l))
      throw coordinate_overflow("shared denominator exceeds int64");
    den[a] = to_int64(l);
  }

  std::vector<std::int64_t> lo(n * dim), len(n * dim);
  for (std::size_t t = 0; t < n; ++t) {
    for (int a = 0; a < dim; ++a) {
      Rational sl = corners[t][a] * Rational(static_cast<long>(den[a]));
      Rational ss = sides[t][a] * Rational(static_cast<long>(den[a]));
      lo[t * dim + a] = to_int64(BigInt(sl.get_num()));
      len[t * dim + a] = to_int64(BigInt(ss.get_num()));
    }
  }
  return from_scaled(dim, std::move(den), std::move(lo), std::move(len),
                     std::nullopt);
}

Rational Tiling::volume(std::size_t t) const {
  BigInt num = 1, d = 1;
  for (int a = 0; a < dim_; ++a) {
    num *= BigInt(static_cast<long>(len(t, a)));
    d *= BigInt(static_cast<long>(den_[a]));
  }
  Rational r(num, d);
  r.canonicalize();
  return r;
}

GammaSequence Tiling::flattened_gamma() const {
  if (!prov_) throw std::logic_error("tiling has no provenance tag");
  return tensor_power(prov_->gamma, prov_->power);
}

void Tiling::normalize() {
  for (int a = 0; a < dim_; ++a) {
    std::int64_t g = den_[a];
    for (std::size_t t = 0; t < size() && g > 1; ++t) {
      g = gcd64(g, lo(t, a));
      g = gcd64(g, len(t, a));
    }
    if (g > 1) {
      den_[a] /= g;
      for (std::size_t t = 0; t < size(); ++t) {
        lo_[t * dim_ + a] /= g;
        len_[t * dim_ + a] /= g;
      }
    }
  }
}

std::int64_t Tiling::bbox_lo(int axis) const {
  std::int64_t m = INT64_MAX;
  for (std::size_t t = 0; t < size(); ++t) m = std::min(m, lo(t, axis));
  return m;
}

std::int64_t Tiling::bbox_hi(int axis) const {
  std::int64_t m = INT64_MIN;
  for (std::size_t t = 0; t < size(); ++t) m = std::max(m, hi(t, axis));
  return m;
}

std::string Tiling::describe() const {
  std::ostringstream os;
  os << dim_ << "-dim tiling, " << size() << " tiles";
  if (prov_) {
    os << " (gamma=<";
    const auto& e = prov_->gamma.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
      os << (i ? "," : "") << e[i];
    os << ">, n=" << prov_->power << ")";
  }
  return os.str();
}

Tiling identity_tiling(int d) {
  if (d < 2) throw std::invalid_argument("identity tiling requires d >= 2");
  std::vector<std::int64_t> den(d, 1), lo(d, 0), len(d, 1);
  return Tiling::from_scaled(
      d, std::move(den), std::move(lo), std::move(len),
      Provenance{GammaSequence({1}), 1});
}

Tiling layered_tiling(int d, const GammaSequence& gamma,
                      const BuildLimits& limits) {
  if (d < 2) throw std::invalid_argument("layered tiling requires d >= 2");
  BigInt count = size_formula(gamma, d);
  if (count > BigInt(static_cast<long>(limits.max_tiles)))
    throw budget_error("layered tiling needs " + count.get_str() +
                       " tiles, budget is " + std::to_string(limits.max_tiles));

  const std::int64_t b = gamma.length();
  const std::int64_t den_h = gamma.lcm_entries();
  const std::size_t n = static_cast<std::size_t>(count.get_ui());

  std::vector<std::int64_t> den(d, den_h);
  den[d - 1] = b;
  std::vector<std::int64_t> lo, len;
  lo.reserve(n * d);
  len.reserve(n * d);

  std::vector<std::int64_t> idx(d - 1);
  for (std::int64_t layer = 0; layer < b; ++layer) {
    const std::int64_t g = gamma[static_cast<std::size_t>(layer)];
    const std::int64_t side = den_h / g;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int a = 0; a < d - 1; ++a) {
        lo.push_back(idx[a] * side);
        len.push_back(side);
      }
      lo.push_back(layer);
      len.push_back(1);
      // odometer: the last grid axis runs fastest, matching canonical order
      int a = d - 2;
      while (a >= 0 && ++idx[a] == g) idx[a--] = 0;
      if (a < 0) break;
    }
  }

  // interleave per-tile (we pushed axis-major per tile already)
  // lo/len currently hold axes 0..d-2 then d-1 per tile, which is the
  // expected layout.
  return Tiling::from_scaled(d, std::move(den), std::move(lo), std::move(len),
                             Provenance{gamma, 1});
}

Tiling power_tiling(int d, const GammaSequence& gamma, int n,
                    const BuildLimits& limits) {
  if (n < 0) throw std::invalid_argument("power tiling requires n >= 0");
  BigInt count = bigint_pow(size_formula(gamma, d),
                            static_cast<unsigned long>(n));
  if (count > BigInt(static_cast<long>(limits.max_tiles)))
    throw budget_error("power tiling needs " + count.get_str() +
                       " tiles, budget is " + std::to_string(limits.max_tiles));
  Tiling t = layered_tiling(d, tensor_power(gamma, n), limits);
  t.set_provenance(Provenance{gamma, n});
  return t;
}

Tiling tile_product(const Tiling& S, const Tiling& T,
                    const BuildLimits& limits) {
  if (S.dim() != T.dim())
    throw std::invalid_argument("tile product requires equal dimensions");
  const int d = S.dim();
  BigInt count = BigInt(static_cast<unsigned long>(S.size())) *
                 BigInt(static_cast<unsigned long>(T.size()));
  if (count > BigInt(static_cast<long>(limits.max_tiles)))
    throw budget_error("tile product needs " + count.get_str() +
                       " tiles, budget is " + std::to_string(limits.max_tiles));

  std::vector<std::int64_t> den(d);
  for (int a = 0; a < d; ++a) den[a] = checked_mul(S.den(a), T.den(a));

  const std::size_t n = S.size() * T.size();
  std::vector<std::int64_t> lo(n * d), len(n * d);
  std::size_t out = 0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = 0; j < T.size(); ++j, ++out) {
      for (int a = 0; a < d; ++a) {
        // p(R) = p(A) + p(B) l(A), scaled by den_S * den_T
        lo[out * d + a] = checked_add(checked_mul(S.lo(i, a), T.den(a)),
                                      checked_mul(T.lo(j, a), S.len(i, a)));
        len[out * d + a] = checked_mul(S.len(i, a), T.len(j, a));
      }
    }
  }

  std::optional<Provenance> prov;
  if (S.provenance() && T.provenance()) {
    const auto& ps = *S.provenance();
    const auto& pt = *T.provenance();
    if (ps.gamma == pt.gamma) {
      prov = Provenance{ps.gamma, ps.power + pt.power};
    } else {
      prov = Provenance{tensor(S.flattened_gamma(), T.flattened_gamma()), 1};
    }
  }
  return Tiling::from_scaled(d, std::move(den), std::move(lo), std::move(len),
                             std::move(prov));
}

bool same_tile_set(const Tiling& a, const Tiling& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  Tiling x = a, y = b;
  x.normalize();
  y.normalize();
  for (int ax = 0; ax < a.dim(); ++ax)
    if (x.den(ax) != y.den(ax)) return false;
  for (std::size_t t = 0; t < x.size(); ++t)
    for (int ax = 0; ax < x.dim(); ++ax)
      if (x.lo(t, ax) != y.lo(t, ax) || x.len(t, ax) != y.len(t, ax))
        return false;
  return true;
}

namespace {

struct DisjointScan {
  const Tiling* t;
  std::vector<int> axis_order;
  ValidationReport* rep;
  static constexpr std::size_t kMaxListed = 16;

  bool interior_overlap(std::uint32_t a, std::uint32_t b) const {
    for (int ax = 0; ax < t->dim(); ++ax) {
      std::int64_t lo = std::max(t->lo(a, ax), t->lo(b, ax));
      std::int64_t hi = std::min(t->hi(a, ax), t->hi(b, ax));
      if (lo >= hi) return false;
    }
    return true;
  }

  void record(std::uint32_t a, std::uint32_t b) {
    rep->disjoint_ok = false;
    ++rep->overlap_pair_count;
    if (rep->overlap_pairs.size() < kMaxListed)
      rep->overlap_pairs.push_back({std::min(a, b), std::max(a, b)});
  }

  void run(std::vector<std::uint32_t>& idx, std::size_t pos) {
    if (idx.size() < 2) return;
    if (pos == axis_order.size()) {
      // identical on every axis: duplicated tiles
      for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        record(idx[i], idx[i + 1]);
      return;
    }
    const int ax = axis_order[pos];
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                if (t->lo(a, ax) != t->lo(b, ax))
                  return t->lo(a, ax) < t->lo(b, ax);
                return t->hi(a, ax) < t->hi(b, ax);
              });

    std::size_t start = 0;
    while (start < idx.size()) {
      std::int64_t run_hi = t->hi(idx[start], ax);
      bool identical = true;
      std::size_t end = start + 1;
      while (end < idx.size() && t->lo(idx[end], ax) < run_hi) {
        identical = identical && t->lo(idx[end], ax) == t->lo(idx[start], ax) &&
                    t->hi(idx[end], ax) == t->hi(idx[start], ax);
        run_hi = std::max(run_hi, t->hi(idx[end], ax));
        ++end;
      }
      if (end - start >= 2) {
        std::vector<std::uint32_t> sub(idx.begin() + start, idx.begin() + end);
        if (identical) {
          run(sub, pos + 1);
        } else {
          // irregular overlap cluster: exact pairwise check
          for (std::size_t i = 0; i < sub.size(); ++i)
            for (std::size_t j = i + 1; j < sub.size(); ++j)
              if (interior_overlap(sub[i], sub[j])) record(sub[i], sub[j]);
        }
      }
      start = end;
    }
  }
};

}  // namespace

ValidationReport validate_tiling(const Tiling& t) {
  ValidationReport rep;
  const int d = t.dim();
  const std::size_t n = t.size();

  BigInt vol_num = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt p = 1;
    for (int a = 0; a < d; ++a) p *= BigInt(static_cast<long>(t.len(i, a)));
    vol_num += p;
  }
  BigInt den_prod = 1, bbox_num = 1;
  for (int a = 0; a < d; ++a) {
    den_prod *= BigInt(static_cast<long>(t.den(a)));
    std::int64_t blo = t.bbox_lo(a), bhi = t.bbox_hi(a);
    bbox_num *= BigInt(static_cast<long>(bhi - blo));
    rep.bbox_corner.push_back(make_rational(blo, t.den(a)));
    rep.bbox_upper.push_back(make_rational(bhi, t.den(a)));
  }
  rep.total_volume = Rational(vol_num, den_prod);
  rep.total_volume.canonicalize();
  rep.bbox_volume = Rational(bbox_num, den_prod);
  rep.bbox_volume.canonicalize();
  rep.volume_ok = (vol_num == bbox_num);

  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  DisjointScan scan{&t, canonical_axis_order(d), &rep};
  scan.run(idx, 0);
  return rep;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "valid" : "INVALID") << ": volume " << total_volume.get_str()
     << " of bbox " << bbox_volume.get_str() << ", " << overlap_pair_count
     << " overlapping pairs";
  return os.str();
}

}  // namespace tilings
