#include "tilings/separators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tilings/growth.hpp"
#include "tilings/maxflow.hpp"

namespace tilings {

FiberFamily project(const Tiling& t) {
  const int d = t.dim();
  if (d < 2) throw std::invalid_argument("projection requires d >= 2");
  const std::size_t n = t.size();

  // key: scaled (lo, len) on axes 1..d-1
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    for (int ax = 1; ax < d; ++ax) {
      if (t.lo(a, ax) != t.lo(b, ax)) return t.lo(a, ax) < t.lo(b, ax);
      if (t.len(a, ax) != t.len(b, ax)) return t.len(a, ax) < t.len(b, ax);
    }
    return t.lo(a, 0) < t.lo(b, 0);  // order along the dropped axis
  };
  auto key_equal = [&](std::uint32_t a, std::uint32_t b) {
    for (int ax = 1; ax < d; ++ax)
      if (t.lo(a, ax) != t.lo(b, ax) || t.len(a, ax) != t.len(b, ax))
        return false;
    return true;
  };
  std::sort(order.begin(), order.end(), key_less);

  std::vector<std::int64_t> base_den(d - 1);
  for (int ax = 1; ax < d; ++ax) base_den[ax - 1] = t.den(ax);
  std::vector<std::int64_t> base_lo, base_len;
  std::vector<std::vector<std::uint32_t>> groups;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && key_equal(order[i], order[j])) ++j;
    groups.emplace_back(order.begin() + i, order.begin() + j);
    for (int ax = 1; ax < d; ++ax) {
      base_lo.push_back(t.lo(order[i], ax));
      base_len.push_back(t.len(order[i], ax));
    }
    i = j;
  }

  std::optional<Provenance> prov = t.provenance();
  Tiling base = Tiling::from_scaled(d - 1, base_den, base_lo, base_len, prov);

  // canonical sort may permute base tiles: recover indices by key search
  FiberFamily fam;
  fam.fibers.assign(groups.size(), {});
  fam.tile_to_base.assign(n, 0);
  auto base_key_less = [&](const std::vector<std::int64_t>& key,
                           std::size_t b_idx) {
    // canonical order of the base: (axis d-2, then 0,1,...)
    std::vector<int> ord;
    ord.push_back(d - 2);
    for (int a = 0; a + 1 < d - 1; ++a) ord.push_back(a);
    for (int a : ord) {
      if (key[a] != base.lo(b_idx, a)) return key[a] < base.lo(b_idx, a);
    }
    for (int a : ord) {
      if (key[(d - 1) + a] != base.len(b_idx, a))
        return key[(d - 1) + a] < base.len(b_idx, a);
    }
    return false;
  };
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::vector<std::int64_t> key(2 * (d - 1));
    std::uint32_t rep = groups[gi][0];
    for (int ax = 1; ax < d; ++ax) {
      key[ax - 1] = t.lo(rep, ax);
      key[(d - 1) + (ax - 1)] = t.len(rep, ax);
    }
    // binary search over base tiles in canonical order
    std::size_t lo = 0, hi = base.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (base_key_less(key, mid)) hi = mid;
      else lo = mid + 1;
    }
    // lo-1 is the last index with base_key <= key; verify equality
    std::size_t b_idx = lo == 0 ? 0 : lo - 1;
    bool match = true;
    for (int a = 0; a < d - 1; ++a)
      if (base.lo(b_idx, a) != key[a] || base.len(b_idx, a) != key[d - 1 + a])
        match = false;
    if (!match) throw std::logic_error("projection base index lookup failed");
    fam.fibers[b_idx] = groups[gi];
    for (std::uint32_t tile : groups[gi]) fam.tile_to_base[tile] = b_idx;
  }
  fam.base = std::move(base);
  return fam;
}

FiberPathCheck fiber_is_path(const FiberFamily& family, const TangencyGraph& g,
                             std::uint32_t base_id) {
  FiberPathCheck out;
  const auto& fiber = family.fibers.at(base_id);
  out.order = fiber;  // already ordered along axis 1 by construction
  if (fiber.size() == 1) {
    out.is_path = true;
    return out;
  }

  std::vector<std::uint32_t> sorted = fiber;
  std::sort(sorted.begin(), sorted.end());
  auto in_fiber = [&](std::uint32_t v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  };
  auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
    auto adj = g.graph.adj(a);
    return std::binary_search(adj.begin(), adj.end(), b);
  };

  for (std::size_t i = 0; i + 1 < fiber.size(); ++i) {
    if (!adjacent(fiber[i], fiber[i + 1])) {
      out.violation = "consecutive fiber tiles not tangent";
      return out;
    }
  }
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    std::size_t inside = 0;
    for (std::uint32_t w : g.graph.adj(fiber[i]))
      if (in_fiber(w)) ++inside;
    std::size_t expect = (i == 0 || i + 1 == fiber.size()) ? 1 : 2;
    if (inside != expect) {
      out.violation = "fiber induces a non-path (extra adjacency at tile " +
                      std::to_string(fiber[i]) + ")";
      return out;
    }
  }
  out.is_path = true;
  return out;
}

FiberDiameterCheck fiber_diameter_bound(const Tiling& t,
                                        const FiberFamily& family,
                                        const TangencyGraph& g,
                                        std::uint32_t base_id) {
  FiberDiameterCheck out;
  Rational L(0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int a = 0; a < t.dim(); ++a) L = std::max(L, t.side(i, a));
  out.bound = Rational(1) / L - Rational(1);

  const auto& fiber = family.fibers.at(base_id);
  if (fiber.size() == 1) {
    out.end_distance = 0;
  } else {
    auto dist = bfs_distances(g.graph, fiber.front());
    out.end_distance = dist[fiber.back()];
    if (out.end_distance < 0)
      throw std::runtime_error("fiber ends are disconnected");
  }
  out.ok = Rational(static_cast<long>(out.end_distance)) >= out.bound;
  return out;
}

AnnulusCertificate annulus_path_certificate(const Tiling& t,
                                            const TangencyGraph& g,
                                            const FiberFamily& family,
                                            std::uint32_t v, std::int64_t R) {
  if (!t.provenance())
    throw std::invalid_argument("annulus certificate needs provenance");
  const Provenance& prov = *t.provenance();
  if (!prov.gamma.boundary_min())
    throw std::invalid_argument("annulus certificate needs boundary-min gamma");
  const int d = t.dim();
  const std::int64_t b = prov.gamma.length();
  const int n = prov.power;

  AnnulusCertificate cert;
  cert.center = v;
  cert.radius = R;

  if (R < d + 1) {
    cert.note = "radius below d+1: h undefined, empty certificate";
    return cert;
  }
  // h = floor(log_b(R/(d+1))): largest h with (d+1) b^h <= R
  std::int64_t h = 0, scale = d + 1;
  while (checked_mul(scale, b) <= R) {
    scale = checked_mul(scale, b);
    ++h;
  }
  if (h > n) {
    h = n;
    cert.note = "h clamped to n (radius covers the whole tiling)";
  }
  cert.h = h;
  cert.required_count =
      bigint_pow(size_formula(prov.gamma, d - 1), static_cast<unsigned long>(h));

  // locate the copy of T_{gamma^(x)h} containing v via integer division
  GammaSequence coarse = tensor_power(prov.gamma, n - h);
  std::int64_t bh = 1;
  for (std::int64_t i = 0; i < h; ++i) bh = checked_mul(bh, b);
  // coarse layer of v: the stacking axis has b^n units, b^h per coarse layer
  std::int64_t coarse_layer = floor_div(t.lo(v, d - 1), bh);
  std::int64_t sigma_coarse = coarse[static_cast<std::size_t>(coarse_layer)];

  std::vector<std::int64_t> cell_lo(d), cell_hi(d);
  for (int ax = 0; ax + 1 < d; ++ax) {
    if (t.den(ax) % sigma_coarse != 0)
      throw std::logic_error("copy cell width is not integral");
    std::int64_t w = t.den(ax) / sigma_coarse;
    std::int64_t c = floor_div(t.lo(v, ax), w);
    cell_lo[ax] = c * w;
    cell_hi[ax] = (c + 1) * w;
  }
  cell_lo[d - 1] = coarse_layer * bh;
  cell_hi[d - 1] = (coarse_layer + 1) * bh;

  // fibers of all tiles inside the copy
  std::vector<bool> fiber_used(family.fiber_count(), false);
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool inside = true;
    for (int ax = 0; ax < d && inside; ++ax)
      inside = t.lo(i, ax) >= cell_lo[ax] && t.hi(i, ax) <= cell_hi[ax];
    if (inside) {
      members.push_back(static_cast<std::uint32_t>(i));
      fiber_used[family.tile_to_base[i]] = true;
    }
  }
  for (std::size_t f = 0; f < fiber_used.size(); ++f)
    if (fiber_used[f]) cert.fiber_ids.push_back(static_cast<std::uint32_t>(f));

  cert.count_ok = BigInt(static_cast<unsigned long>(cert.fiber_ids.size())) >=
                  cert.required_count;

  // fibers are disjoint by construction (distinct base tiles partition the
  // tile set); verify the partition property explicitly
  std::size_t fiber_total = 0;
  for (const auto& f : family.fibers) fiber_total += f.size();
  cert.fibers_disjoint = fiber_total == t.size();

  // every listed fiber must contain a tile inside B(v,R)
  auto dist = bfs_distances(g.graph, v, R);
  cert.fibers_meet_ball = true;
  for (std::uint32_t m : members) {
    if (dist[m] < 0 || dist[m] > R) {
      cert.fibers_meet_ball = false;
      cert.note += " copy tile " + std::to_string(m) + " outside B(v,R)";
      break;
    }
  }
  return cert;
}

bool annulus_regime_ok(const Tiling& t, std::int64_t R_prime) {
  Rational L(0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int a = 0; a < t.dim(); ++a) L = std::max(L, t.side(i, a));
  // R' < (1/L - 1) / 2
  return Rational(static_cast<long>(2 * R_prime)) < Rational(1) / L - 1;
}

namespace {

constexpr std::int64_t kUncut = 1'000'000'000;

}  // namespace

CutCertificate disjoint_path_count(const Graph& g,
                                   const std::vector<std::uint32_t>& s1,
                                   const std::vector<std::uint32_t>& s2,
                                   std::size_t guard, bool want_paths) {
  if (g.n > guard)
    throw std::invalid_argument("flow guard exceeded: " + std::to_string(g.n));
  if (s1.empty() || s2.empty())
    throw std::invalid_argument("terminal sets must be nonempty");
  {
    std::vector<std::uint32_t> a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::uint32_t v : b)
      if (std::binary_search(a.begin(), a.end(), v))
        throw std::invalid_argument("terminal sets overlap");
  }

  // vertex splitting: v_in = 2v, v_out = 2v+1. Interior vertices carry unit
  // splitters, terminals are uncuttable (paths are disjoint away from the
  // terminal sets: opposite corners of a 4-cycle admit two paths), and every
  // min cut is a set of interior splitters.
  std::vector<bool> terminal(g.n, false);
  for (std::uint32_t v : s1) terminal[v] = true;
  for (std::uint32_t v : s2) terminal[v] = true;
  // adjacent terminal pairs leave no interior vertex to cut
  {
    std::vector<bool> in1(g.n, false), in2(g.n, false);
    for (std::uint32_t v : s1) in1[v] = true;
    for (std::uint32_t v : s2) in2[v] = true;
    for (const auto& [u, v] : g.edges)
      if ((in1[u] && in2[v]) || (in1[v] && in2[u]))
        throw std::invalid_argument(
            "terminal sets are adjacent; interior cuts do not exist");
  }

  FlowNetwork net(2 * g.n + 2);
  const std::uint32_t s = 2 * g.n, tnode = 2 * g.n + 1;
  for (std::uint32_t v = 0; v < g.n; ++v)
    net.add_arc(2 * v, 2 * v + 1, terminal[v] ? kUncut : 1);
  for (const auto& [u, v] : g.edges) {
    net.add_arc(2 * u + 1, 2 * v, kUncut);
    net.add_arc(2 * v + 1, 2 * u, kUncut);
  }
  for (std::uint32_t v : s1) net.add_arc(s, 2 * v, kUncut);
  for (std::uint32_t v : s2) net.add_arc(2 * v + 1, tnode, kUncut);

  CutCertificate cert;
  cert.path_count = net.max_flow(s, tnode);

  std::vector<bool> reach = net.residual_reachable(s);
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) cert.min_cut.push_back(v);
  cert.menger_ok =
      cert.path_count == static_cast<std::int64_t>(cert.min_cut.size());

  if (want_paths) {
    for (auto& walk : net.extract_unit_paths(s, tnode)) {
      std::vector<std::uint32_t> path;
      for (std::uint32_t node : walk) {
        if (node >= 2 * g.n) continue;
        if ((node & 1u) == 0) path.push_back(node / 2);
      }
      cert.paths.push_back(std::move(path));
    }
  }
  return cert;
}

MinSeparatorResult min_annular_separator(const Graph& g, std::uint32_t v,
                                         std::int64_t R, std::int64_t R_prime,
                                         std::size_t guard) {
  if (R < 1 || R_prime <= R)
    throw std::invalid_argument("annulus needs 1 <= R < R'");
  if (g.n > guard)
    throw std::invalid_argument("flow guard exceeded: " + std::to_string(g.n));

  auto dist = bfs_distances(g, v, R_prime);
  MinSeparatorResult res;

  bool has_target = false;
  for (std::uint32_t w = 0; w < g.n; ++w)
    if (dist[w] == R_prime) {
      has_target = true;
      break;
    }
  if (!has_target) {
    res.empty_target = true;
    res.menger_ok = true;
    return res;
  }

  // sphere-separator upper bound over strictly intermediate radii
  if (R_prime - R >= 2) {
    std::vector<std::uint64_t> sphere_sizes(
        static_cast<std::size_t>(R_prime - R - 1), 0);
    for (std::uint32_t w = 0; w < g.n; ++w)
      if (dist[w] > R && dist[w] < R_prime)
        ++sphere_sizes[static_cast<std::size_t>(dist[w] - R - 1)];
    res.sphere_bound =
        *std::min_element(sphere_sizes.begin(), sphere_sizes.end());
  }

  // network over B(v,R'): the ball B(v,R) is contracted into the source
  // (uncuttable), annulus vertices get unit splitters
  std::vector<std::uint32_t> node_id(g.n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t w = 0; w < g.n; ++w)
    if (dist[w] > R && dist[w] <= R_prime) {
      node_id[w] = next;
      next += 2;
    }
  FlowNetwork net(next + 2);
  const std::uint32_t s = next, tnode = next + 1;
  std::vector<std::uint32_t> annulus;
  for (std::uint32_t w = 0; w < g.n; ++w) {
    if (node_id[w] == UINT32_MAX) continue;
    annulus.push_back(w);
    net.add_arc(node_id[w], node_id[w] + 1, 1);
    if (dist[w] == R_prime) net.add_arc(node_id[w] + 1, tnode, kUncut);
  }
  std::vector<std::size_t> splitter_of(g.n, SIZE_MAX);
  for (std::size_t i = 0; i < annulus.size(); ++i)
    splitter_of[annulus[i]] = 2 * static_cast<std::size_t>(i);

  for (const auto& [a, b] : g.edges) {
    bool a_ball = dist[a] >= 0 && dist[a] <= R;
    bool b_ball = dist[b] >= 0 && dist[b] <= R;
    bool a_ann = node_id[a] != UINT32_MAX;
    bool b_ann = node_id[b] != UINT32_MAX;
    if (a_ball && b_ann) net.add_arc(s, node_id[b], kUncut);
    if (b_ball && a_ann) net.add_arc(s, node_id[a], kUncut);
    if (a_ann && b_ann) {
      net.add_arc(node_id[a] + 1, node_id[b], kUncut);
      net.add_arc(node_id[b] + 1, node_id[a], kUncut);
    }
  }

  res.path_count = net.max_flow(s, tnode);
  std::vector<bool> reach = net.residual_reachable(s);
  for (std::uint32_t w : annulus)
    if (reach[node_id[w]] && !reach[node_id[w] + 1]) res.separator.push_back(w);
  res.menger_ok =
      res.path_count == static_cast<std::int64_t>(res.separator.size());
  return res;
}

}  // namespace tilings
