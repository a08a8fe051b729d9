#include "tilings/growth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace tilings {

namespace {

// bounded BFS sharing scratch buffers with the caller
struct BfsScratch {
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> queue;
  std::vector<std::uint32_t> touched;

  void ensure(std::uint32_t n) {
    if (dist.size() < n) dist.assign(n, -1);
  }

  // returns the visited vertex list; dist[] holds distances for them
  const std::vector<std::uint32_t>& run(const Graph& g, std::uint32_t src,
                                        std::int64_t max_radius) {
    ensure(g.n);
    for (std::uint32_t v : touched) dist[v] = -1;
    touched.clear();
    queue.clear();
    dist[src] = 0;
    queue.push_back(src);
    touched.push_back(src);
    std::size_t head = 0;
    while (head < queue.size()) {
      std::uint32_t v = queue[head++];
      std::int32_t dv = dist[v];
      if (max_radius >= 0 && dv >= max_radius) continue;
      for (std::uint32_t w : g.adj(v)) {
        if (dist[w] < 0) {
          dist[w] = dv + 1;
          queue.push_back(w);
          touched.push_back(w);
        }
      }
    }
    return queue;
  }
};

}  // namespace

std::vector<std::uint32_t> ball_vertices(const Graph& g, std::uint32_t v,
                                         std::int64_t radius) {
  if (v >= g.n) throw std::invalid_argument("vertex out of range");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  BfsScratch s;
  std::vector<std::uint32_t> out = s.run(g, v, radius);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> sphere_vertices(const Graph& g, std::uint32_t v,
                                           std::int64_t radius) {
  if (v >= g.n) throw std::invalid_argument("vertex out of range");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  BfsScratch s;
  std::vector<std::uint32_t> ball = s.run(g, v, radius);
  std::vector<std::uint32_t> out;
  for (std::uint32_t w : ball)
    if (s.dist[w] == radius) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ball_size(const Graph& g, std::uint32_t v, std::int64_t radius) {
  if (v >= g.n) throw std::invalid_argument("vertex out of range");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  BfsScratch s;
  return s.run(g, v, radius).size();
}

std::uint64_t sphere_size(const Graph& g, std::uint32_t v,
                          std::int64_t radius) {
  return sphere_vertices(g, v, radius).size();
}

namespace {

struct EccResult {
  std::int64_t ecc = 0;
  std::uint32_t farthest = 0;
};

EccResult ecc_with_farthest(const Graph& g, std::uint32_t src,
                            std::vector<std::int32_t>& dist) {
  dist = bfs_distances(g, src);
  EccResult r;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (dist[v] > r.ecc) {
      r.ecc = dist[v];
      r.farthest = v;
    }
    if (dist[v] < 0) throw std::runtime_error("diameter of disconnected graph");
  }
  return r;
}

}  // namespace

// Exact diameter by repeated BFS with certified pruning: every BFS from L
// yields ecc(L) and the bound ecc(v) <= d(L,v) + ecc(L) for all v. We keep
// the pointwise minimum of those bounds and repeatedly probe the vertex with
// the largest remaining bound; once max_v ub(v) <= lb the value is certified.
DiameterResult diameter_exact(const Graph& g) {
  DiameterResult res;
  if (g.n == 0) return res;
  res.exact = true;
  if (g.n == 1) return res;

  std::vector<std::int32_t> dist;
  std::vector<std::int64_t> ub(g.n, INT64_MAX);
  std::vector<bool> probed(g.n, false);
  std::int64_t lb = 0;

  auto probe = [&](std::uint32_t src) {
    EccResult e = ecc_with_farthest(g, src, dist);
    res.bfs_count++;
    lb = std::max(lb, e.ecc);
    probed[src] = true;
    for (std::uint32_t v = 0; v < g.n; ++v)
      ub[v] = std::min(ub[v], e.ecc + dist[v]);
    ub[src] = e.ecc;
    return e;
  };

  // double sweep seeds: a far vertex, its antipode, and a midpoint
  EccResult e0 = probe(0);
  std::uint32_t a = e0.farthest;

  std::vector<std::uint32_t> parent(g.n, UINT32_MAX);
  {
    dist.assign(g.n, -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(g.n);
    dist[a] = 0;
    queue.push_back(a);
    std::size_t head = 0;
    while (head < queue.size()) {
      std::uint32_t v = queue[head++];
      for (std::uint32_t w : g.adj(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    res.bfs_count++;
    probed[a] = true;
    std::int64_t ecc_a = 0;
    std::uint32_t b = a;
    for (std::uint32_t v = 0; v < g.n; ++v) {
      if (dist[v] > ecc_a) {
        ecc_a = dist[v];
        b = v;
      }
    }
    lb = std::max(lb, ecc_a);
    for (std::uint32_t v = 0; v < g.n; ++v)
      ub[v] = std::min(ub[v], ecc_a + dist[v]);
    ub[a] = ecc_a;

    // midpoint of the a-b shortest path makes a central seed
    std::uint32_t mid = b;
    for (std::int64_t step = 0; step < ecc_a / 2; ++step) mid = parent[mid];
    probe(b);
    probe(mid);
  }

  // refine: probe the worst remaining bound until it is dominated
  while (true) {
    std::int64_t worst = lb;
    std::uint32_t pick = UINT32_MAX;
    for (std::uint32_t v = 0; v < g.n; ++v) {
      if (!probed[v] && ub[v] > worst) {
        worst = ub[v];
        pick = v;
      }
    }
    if (pick == UINT32_MAX) break;  // max_v ub(v) <= lb: lb is the diameter
    probe(pick);
  }
  res.lower = res.upper = lb;
  return res;
}

DiameterResult diameter_bounds(const Graph& g, std::uint64_t seed,
                               int samples) {
  DiameterResult res;
  if (g.n == 0) return res;
  std::vector<std::int32_t> dist;

  EccResult e0 = ecc_with_farthest(g, 0, dist);
  res.bfs_count++;
  EccResult ea = ecc_with_farthest(g, e0.farthest, dist);
  res.bfs_count++;
  std::int64_t lb = ea.ecc;
  std::int64_t min_ecc = std::min(e0.ecc, ea.ecc);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, g.n - 1);
  for (int i = 0; i < samples; ++i) {
    EccResult ev = ecc_with_farthest(g, pick(rng), dist);
    res.bfs_count++;
    lb = std::max(lb, ev.ecc);
    min_ecc = std::min(min_ecc, ev.ecc);
  }
  res.lower = lb;
  res.upper = std::min(2 * min_ecc, static_cast<std::int64_t>(g.n) - 1);
  res.exact = (res.lower == res.upper);
  return res;
}

DiameterResult diameter(const Graph& g, std::size_t exact_guard,
                        std::uint64_t seed, int samples) {
  if (g.n <= exact_guard) return diameter_exact(g);
  return diameter_bounds(g, seed, samples);
}

std::vector<std::uint32_t> sample_vertices(std::uint32_t n,
                                           const GrowthOptions& opt) {
  std::vector<std::uint32_t> out;
  if (n <= opt.full_enumeration_below ||
      n <= static_cast<std::uint32_t>(opt.sample_count)) {
    out.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) out[v] = v;
    return out;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::set<std::uint32_t> seen;
  while (seen.size() < static_cast<std::size_t>(opt.sample_count))
    seen.insert(pick(rng));
  out.assign(seen.begin(), seen.end());
  return out;
}

namespace {

double ols_slope(const std::vector<std::pair<double, double>>& xy) {
  double sx = 0, sy = 0;
  for (auto [x, y] : xy) {
    sx += x;
    sy += y;
  }
  double mx = sx / xy.size(), my = sy / xy.size();
  double num = 0, den = 0;
  for (auto [x, y] : xy) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  if (den == 0) throw std::invalid_argument("degenerate radius set for fit");
  return num / den;
}

}  // namespace

GrowthProfile growth_profile(const Graph& g, const GrowthOptions& opt,
                             std::optional<double> k_theory) {
  if (g.n < 2)
    throw std::invalid_argument("growth profile needs at least two vertices");
  if (opt.radii.empty())
    throw std::invalid_argument("growth profile needs radii");
  if (opt.radii.size() < 2)
    throw std::invalid_argument("growth fit needs at least two radii");

  // cheap range guard: radii must be plausible graph distances
  BfsScratch scratch;
  scratch.run(g, 0, -1);
  std::int64_t ecc0 = 0;
  for (std::uint32_t v : scratch.queue)
    ecc0 = std::max<std::int64_t>(ecc0, scratch.dist[v]);
  if (scratch.queue.size() != g.n)
    throw std::runtime_error("growth profile on disconnected graph");
  for (std::int64_t r : opt.radii) {
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    if (r > 2 * ecc0)
      throw std::invalid_argument("radius exceeds graph diameter");
  }

  GrowthProfile prof;
  prof.k_theory = k_theory;
  std::vector<std::uint32_t> verts = sample_vertices(g.n, opt);

  // ball sizes per (sample, radius), BFS jobs sharded over threads
  std::vector<std::uint64_t> balls(verts.size() * opt.radii.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    BfsScratch local;
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t r = 0; r < opt.radii.size(); ++r)
        balls[i * opt.radii.size() + r] =
            local.run(g, verts[i], opt.radii[r]).size();
  };
  const int threads = std::max(1, opt.threads);
  if (threads == 1 || verts.size() < 2) {
    worker(0, verts.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (verts.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = std::min(verts.size(), t * chunk);
      std::size_t end = std::min(verts.size(), begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<std::pair<double, double>> pooled;
  prof.min_vertex_slope = 1e300;
  prof.max_vertex_slope = -1e300;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t r = 0; r < opt.radii.size(); ++r) {
      std::uint64_t b = balls[i * opt.radii.size() + r];
      prof.samples.push_back({verts[i], opt.radii[r], b});
      rows.emplace_back(std::log(static_cast<double>(opt.radii[r])),
                        std::log(static_cast<double>(b)));
    }
    double s = ols_slope(rows);
    prof.min_vertex_slope = std::min(prof.min_vertex_slope, s);
    prof.max_vertex_slope = std::max(prof.max_vertex_slope, s);
    pooled.insert(pooled.end(), rows.begin(), rows.end());
  }
  prof.fitted_k = ols_slope(pooled);

  const double k = k_theory ? *k_theory : prof.fitted_k;
  double c = 1.0;
  for (const GrowthSample& s : prof.samples) {
    double rk = std::pow(static_cast<double>(s.radius), k);
    double b = static_cast<double>(s.ball);
    c = std::max(c, rk / b);
    c = std::max(c, b / rk);
  }
  prof.sandwich_C = c;
  return prof;
}

IngredientReport check_growth_lower_ingredient(
    const Tiling& t, const Graph& g,
    const std::vector<std::uint32_t>& samples) {
  if (!t.provenance())
    throw std::invalid_argument("lower ingredient needs provenance");
  const auto& prov = *t.provenance();
  if (!prov.gamma.boundary_min())
    throw std::invalid_argument("lower ingredient needs boundary-min gamma");
  const int d = t.dim();
  const std::int64_t b = prov.gamma.length();
  const BigInt level_size = size_formula(prov.gamma, d);

  IngredientReport rep;
  BfsScratch scratch;
  for (std::uint32_t v : samples) {
    BigInt need = 1;
    for (int j = 0; j <= prov.power; ++j) {
      if (j > 0) need *= level_size;
      std::int64_t r = d + 1;  // radius (d+1) b^j
      for (int x = 0; x < j; ++x) r = checked_mul(r, b);
      std::uint64_t ball = scratch.run(g, v, r).size();
      if (BigInt(static_cast<unsigned long>(ball)) < need) {
        rep.ok = false;
        rep.violations.push_back(
            "v=" + std::to_string(v) + " j=" + std::to_string(j) + " ball=" +
            std::to_string(ball) + " < " + need.get_str());
      }
    }
  }
  return rep;
}

IngredientReport check_growth_upper_ingredient(
    const Tiling& S, const Tiling& T,
    const std::vector<std::uint32_t>& samples, const BuildLimits& limits) {
  const int d = S.dim();
  if (T.dim() != d) throw std::invalid_argument("dimension mismatch");

  Tiling prod = tile_product(S, T, limits);
  TangencyGraph pg = build_tangency_graph(prod);
  TangencyGraph sg = build_tangency_graph(S);
  AlphaStats sa = alpha_stats(S, sg);

  // L_T = max side of T
  Rational L(0);
  for (std::size_t i = 0; i < T.size(); ++i)
    for (int a = 0; a < d; ++a)
      L = std::max(L, T.side(i, a));

  Rational alpha_pow = rational_pow(sa.alpha, static_cast<unsigned long>(2 * d));
  Rational radius_rat = Rational(1) / (alpha_pow * L);
  BigInt radius_floor = BigInt(radius_rat.get_num() / radius_rat.get_den());
  std::int64_t radius = fits_int64(radius_floor) ? to_int64(radius_floor)
                                                 : INT64_MAX;

  // (3 alpha^2)^(d^2) (d+1) |T|
  Rational bound = rational_pow(Rational(3) * sa.alpha * sa.alpha,
                                static_cast<unsigned long>(d * d));
  bound *= Rational(static_cast<long>(d + 1));
  bound *= Rational(static_cast<long>(T.size()));

  IngredientReport rep;
  BfsScratch scratch;
  for (std::uint32_t v : samples) {
    if (v >= pg.graph.n) continue;
    std::uint64_t ball = scratch.run(pg.graph, v, radius).size();
    if (Rational(static_cast<long>(ball)) > bound) {
      rep.ok = false;
      rep.violations.push_back("X=" + std::to_string(v) +
                               " ball=" + std::to_string(ball) +
                               " exceeds bound");
    }
  }
  return rep;
}

}  // namespace tilings
