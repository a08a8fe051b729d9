#include "tilings/orthant.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilings/packing.hpp"
#include "tilings/tangency.hpp"

namespace tilings {

namespace {

void require_rescaled(const Tiling& t) {
  if (!t.provenance())
    throw std::invalid_argument("orthant identification needs provenance");
}

}  // namespace

std::uint32_t lift_tile(const Tiling& from, const Tiling& to,
                        std::uint32_t v) {
  require_rescaled(from);
  require_rescaled(to);
  if (from.dim() != to.dim()) throw std::invalid_argument("dimension mismatch");
  const int d = from.dim();

  std::vector<std::int64_t> want_lo(d), want_len(d);
  for (int a = 0; a < d; ++a) {
    if (to.den(a) % from.den(a) != 0)
      throw std::invalid_argument("levels are not nested");
    const std::int64_t scale = to.den(a) / from.den(a);
    want_lo[a] = checked_mul(from.lo(v, a), scale);
    want_len[a] = checked_mul(from.len(v, a), scale);
  }

  // binary search in canonical order: (axis d-1, then 0, 1, ...)
  std::vector<int> order;
  order.push_back(d - 1);
  for (int a = 0; a + 1 < d; ++a) order.push_back(a);
  auto target_less_than = [&](std::size_t idx) {
    for (int a : order) {
      if (want_lo[a] != to.lo(idx, a)) return want_lo[a] < to.lo(idx, a);
    }
    for (int a : order) {
      if (want_len[a] != to.len(idx, a)) return want_len[a] < to.len(idx, a);
    }
    return false;
  };
  std::size_t lo = 0, hi = to.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (target_less_than(mid)) hi = mid;
    else lo = mid + 1;
  }
  if (lo == 0) throw std::invalid_argument("tile not present at target level");
  std::size_t idx = lo - 1;
  for (int a = 0; a < d; ++a)
    if (to.lo(idx, a) != want_lo[a] || to.len(idx, a) != want_len[a])
      throw std::invalid_argument("tile not present at target level");
  return static_cast<std::uint32_t>(idx);
}

int level_for_radius(const GammaSequence& gamma, int d, const Tiling& home,
                     std::uint32_t v, std::int64_t radius) {
  require_rescaled(home);
  if (!gamma.boundary_min())
    throw std::invalid_argument("orthant construction needs boundary-min gamma");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const int n0 = home.provenance()->power;
  if (radius == 0) return n0;

  // absolute upper coordinates of v (the home scale is (lcm/b)^n0)
  std::vector<Rational> v_hi(d);
  for (int a = 0; a < d; ++a) v_hi[a] = home.upper(v, a);

  const std::int64_t b = gamma.length();
  for (int n = n0;; ++n) {
    // horizontal extent b^n; height H_n = sum of layer sides
    BigInt horiz = bigint_pow(BigInt(static_cast<long>(b)),
                              static_cast<unsigned long>(n));
    GammaSequence sigma = tensor_power(gamma, n);
    Rational height(0);
    for (std::int64_t j = 0; j < sigma.length(); ++j)
      height += Rational(horiz) /
                Rational(static_cast<long>(sigma[static_cast<std::size_t>(j)]));

    Rational min_gap = Rational(horiz) - v_hi[0];
    for (int a = 1; a + 1 < d; ++a)
      min_gap = std::min(min_gap, Rational(Rational(horiz) - v_hi[a]));
    min_gap = std::min(min_gap, Rational(height - v_hi[d - 1]));

    if (min_gap > Rational(static_cast<long>(2 * radius + 1))) return n;
  }
}

LocalView orthant_ball_at_level(const GammaSequence& gamma, int d,
                                const Tiling& home, std::uint32_t v,
                                std::int64_t radius, int level,
                                const BuildLimits& limits) {
  LocalView view;
  view.level = level;
  view.radius = radius;
  view.certified = level >= level_for_radius(gamma, d, home, v, radius);

  Tiling t = rescaled_tiling(gamma, level, d, limits);
  TangencyGraph g = build_tangency_graph(t);
  view.center = lift_tile(home, t, v);

  auto dist = bfs_distances(g.graph, view.center, radius);
  for (std::uint32_t w = 0; w < g.graph.n; ++w)
    if (dist[w] >= 0) view.vertices.push_back(w);
  std::sort(view.vertices.begin(), view.vertices.end());

  auto index_of = [&](std::uint32_t w) {
    return static_cast<std::uint32_t>(
        std::lower_bound(view.vertices.begin(), view.vertices.end(), w) -
        view.vertices.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t w : view.vertices) {
    for (std::uint32_t x : g.graph.adj(w)) {
      if (x > w && dist[x] >= 0) edges.emplace_back(index_of(w), index_of(x));
    }
  }
  view.induced = Graph::from_edges(
      static_cast<std::uint32_t>(view.vertices.size()), std::move(edges));
  view.dist.reserve(view.vertices.size());
  for (std::uint32_t w : view.vertices) view.dist.push_back(dist[w]);
  return view;
}

LocalView orthant_ball(const GammaSequence& gamma, int d, const Tiling& home,
                       std::uint32_t v, std::int64_t radius,
                       const BuildLimits& limits) {
  int level = level_for_radius(gamma, d, home, v, radius);
  // the level build itself is the budget gate
  return orthant_ball_at_level(gamma, d, home, v, radius, level, limits);
}

}  // namespace tilings
