#include "tilings/packing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace tilings {

namespace {

// squared Euclidean distance of exact points
Rational dist2(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

using QPoint = std::array<qreal, 4>;

qreal qdist(const QPoint& a, const QPoint& b, int d) {
  qreal s = 0;
  for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return qsqrt(s);
}

// minimum distance between segments [p0,p1] and [q0,q1]
qreal segment_distance(const QPoint& p0, const QPoint& p1, const QPoint& q0,
                       const QPoint& q1, int d) {
  QPoint u{}, v{}, w{};
  for (int i = 0; i < d; ++i) {
    u[i] = p1[i] - p0[i];
    v[i] = q1[i] - q0[i];
    w[i] = p0[i] - q0[i];
  }
  auto dot = [d](const QPoint& x, const QPoint& y) {
    qreal s = 0;
    for (int i = 0; i < d; ++i) s += x[i] * y[i];
    return s;
  };
  qreal a = dot(u, u), b = dot(u, v), c = dot(v, v), dd = dot(u, w),
        e = dot(v, w);
  qreal den = a * c - b * b;
  qreal s = 0, t = 0;
  if (den > 0) s = (b * e - c * dd) / den;
  s = std::max<qreal>(0, std::min<qreal>(1, s));
  if (c > 0) t = (b * s + e) / c;
  t = std::max<qreal>(0, std::min<qreal>(1, t));
  if (a > 0) s = (b * t - dd) / a;
  s = std::max<qreal>(0, std::min<qreal>(1, s));
  QPoint ps{}, qt{};
  for (int i = 0; i < d; ++i) {
    ps[i] = p0[i] + s * u[i];
    qt[i] = q0[i] + t * v[i];
  }
  return qdist(ps, qt, d);
}

}  // namespace

Tiling rescaled_tiling(const GammaSequence& gamma, int n, int d,
                       const BuildLimits& limits) {
  if (d < 2) throw std::invalid_argument("cube packing requires d >= 2");
  if (n < 0) throw std::invalid_argument("cube packing requires n >= 0");

  BigInt count =
      bigint_pow(size_formula(gamma, d), static_cast<unsigned long>(n));
  if (count > BigInt(static_cast<long>(limits.max_tiles)))
    throw budget_error("cube packing needs " + count.get_str() +
                       " tiles, budget is " + std::to_string(limits.max_tiles));

  GammaSequence sigma = tensor_power(gamma, n);
  const std::int64_t layers = sigma.length();

  // shared scale: all coordinates are multiples of 1/den with
  // den = (lcm(gamma)/gamma_1)^n, integral since gamma_1 divides the lcm
  std::int64_t den = 1;
  const std::int64_t factor = gamma.lcm_entries() / gamma[0];
  for (int i = 0; i < n; ++i) den = checked_mul(den, factor);

  // side of layer j in scale units: sigma_1 * den / sigma_j
  const std::int64_t sigma1 = sigma[0];
  std::vector<std::int64_t> side(static_cast<std::size_t>(layers));
  for (std::int64_t j = 0; j < layers; ++j) {
    std::int64_t num = checked_mul(sigma1, den);
    if (num % sigma[static_cast<std::size_t>(j)] != 0)
      throw std::logic_error("cube packing scale is not integral");
    side[static_cast<std::size_t>(j)] = num / sigma[static_cast<std::size_t>(j)];
  }

  std::vector<std::int64_t> dens(d, den);
  std::vector<std::int64_t> lo, len;
  lo.reserve(static_cast<std::size_t>(count.get_ui()) * d);
  len.reserve(static_cast<std::size_t>(count.get_ui()) * d);

  std::vector<std::int64_t> idx(d - 1);
  std::int64_t z = 0;
  for (std::int64_t j = 0; j < layers; ++j) {
    const std::int64_t g = sigma[static_cast<std::size_t>(j)];
    const std::int64_t s = side[static_cast<std::size_t>(j)];
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int a = 0; a < d - 1; ++a) {
        lo.push_back(idx[a] * s);
        len.push_back(s);
      }
      lo.push_back(z);
      len.push_back(s);
      int a = d - 2;
      while (a >= 0 && ++idx[a] == g) idx[a--] = 0;
      if (a < 0) break;
    }
    z = checked_add(z, s);
  }
  return Tiling::from_scaled(d, std::move(dens), std::move(lo), std::move(len),
                             Provenance{gamma, n});
}

CubePacking cube_packing(const GammaSequence& gamma, int n, int d,
                         const BuildLimits& limits) {
  if (!gamma.integral_ratios())
    throw std::invalid_argument(
        "cube packing refused: gamma violates the integral-ratio condition");
  if (!gamma.boundary_equal())
    throw std::invalid_argument("cube packing refused: gamma_1 != gamma_b");

  GammaSequence sigma = tensor_power(gamma, n);
  const std::int64_t layers = sigma.length();

  CubePacking cp{rescaled_tiling(gamma, n, d, limits), {}, gamma, n, false,
                 Rational(1)};

  cp.graph = build_tangency_graph(cp.cubes);

  // the rescaling must not change the tangency structure
  Tiling reference = power_tiling(d, gamma, n, limits);
  TangencyGraph ref_graph = build_tangency_graph(reference);
  if (!same_labeled_edges(cp.graph, ref_graph))
    throw std::logic_error(
        "cube packing tangency graph differs from the tiling graph");

  NeatCheck neat = check_neat(cp.cubes, cp.graph);
  if (!neat.ok)
    throw std::logic_error("cube packing is not neat despite integral ratios");
  cp.neat = true;

  // aspect over touching pairs: layers are slabs, so touching cubes sit in
  // the same or adjacent layers and the ratio is the adjacent-entry ratio
  cp.aspect = Rational(1);
  for (std::int64_t j = 0; j + 1 < layers; ++j) {
    Rational r = make_rational(sigma[static_cast<std::size_t>(j + 1)],
                               sigma[static_cast<std::size_t>(j)]);
    if (r < 1) r = Rational(1) / r;
    cp.aspect = std::max(cp.aspect, r);
  }
  AlphaStats st = alpha_stats(cp.cubes, cp.graph);
  if (layers > 1 && st.alpha != cp.aspect)
    throw std::logic_error("cube packing aspect mismatch");
  return cp;
}

NeatCheck check_neat(const Tiling& cubes, const TangencyGraph& g) {
  NeatCheck out;
  const int d = cubes.dim();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.graph.edges[e];
    const int ax = g.edge_dir[e];
    bool u_in_v = true, v_in_u = true;
    for (int j = 0; j < d; ++j) {
      if (j == ax) continue;
      u_in_v = u_in_v && cubes.lo(v, j) <= cubes.lo(u, j) &&
               cubes.hi(u, j) <= cubes.hi(v, j);
      v_in_u = v_in_u && cubes.lo(u, j) <= cubes.lo(v, j) &&
               cubes.hi(v, j) <= cubes.hi(u, j);
    }
    if (!u_in_v && !v_in_u) {
      out.ok = false;
      if (out.violations.size() < 16) out.violations.push_back({u, v});
    }
  }
  return out;
}

StarResult star_spheres(int d, const std::vector<Rational>& corner,
                        const Rational& side,
                        const std::vector<ContactPoint>& contacts,
                        const Rational& eps) {
  if (d < 2) throw std::invalid_argument("star requires d >= 2");
  if (!(eps > 0) || eps > Rational(1, 2))
    throw std::invalid_argument("star requires eps in (0, 1/2]");
  if (side <= 0) throw std::invalid_argument("cube side must be positive");

  const Rational eps_ell = eps * side;

  // verify the contact set: each point on exactly one facet and eps*l-far
  // from the other 2d-1 facets (closure: flush contacts sit at equality)
  for (std::size_t ci = 0; ci < contacts.size(); ++ci) {
    const auto& p = contacts[ci].point;
    if (p.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("contact point dimension mismatch");
    int on_facets = 0;
    Rational min_other = side;
    for (int a = 0; a < d; ++a) {
      Rational lo_gap = p[a] - corner[a];
      Rational hi_gap = corner[a] + side - p[a];
      if (lo_gap < 0 || hi_gap < 0)
        throw std::invalid_argument("contact point " + std::to_string(ci) +
                                    " lies outside the cube");
      if (lo_gap == 0 || hi_gap == 0) {
        ++on_facets;
        min_other = std::min(min_other, std::max(lo_gap, hi_gap));
      } else {
        min_other = std::min(min_other, std::min(lo_gap, hi_gap));
      }
    }
    if (on_facets != 1)
      throw std::invalid_argument("contact point " + std::to_string(ci) +
                                  " lies on " + std::to_string(on_facets) +
                                  " facets, need exactly 1");
    if (min_other < eps_ell)
      throw std::invalid_argument("contact point " + std::to_string(ci) +
                                  " is closer than eps*l to another facet");
  }
  for (std::size_t i = 0; i < contacts.size(); ++i)
    for (std::size_t j = i + 1; j < contacts.size(); ++j)
      if (dist2(contacts[i].point, contacts[j].point) < eps_ell * eps_ell)
        throw std::invalid_argument("contact points " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " are closer than eps*l");

  // k = ceil(6d/eps)
  BigInt knum = BigInt(6 * d) * eps.get_den();
  BigInt kden = eps.get_num();
  BigInt kq = (knum + kden - 1) / kden;
  const int k = static_cast<int>(to_int64(kq));

  StarResult out;
  out.chain_len = k;
  const qreal ell = to_qreal(side);
  const qreal hub_r = ell / 4;
  const qreal leaf_r = to_qreal(eps_ell) / 8;

  QPoint c0{};
  for (int a = 0; a < d; ++a)
    c0[a] = to_qreal(corner[a]) + ell / 2;
  out.spheres.push_back({c0, hub_r, SphereRole::kHub, UINT32_MAX, 0});
  out.min_radius = hub_r;
  out.min_segment_len = std::numeric_limits<double>::max();
  out.max_segment_len = 0;

  std::vector<std::pair<QPoint, QPoint>> segments;
  for (std::size_t ci = 0; ci < contacts.size(); ++ci) {
    const auto& p = contacts[ci].point;
    // leaf center: the contact pushed inward along the facet normal
    QPoint cp{};
    for (int a = 0; a < d; ++a) cp[a] = to_qreal(p[a]);
    for (int a = 0; a < d; ++a) {
      if (p[a] == corner[a]) {
        cp[a] += leaf_r;
        break;
      }
      if (p[a] == corner[a] + side) {
        cp[a] -= leaf_r;
        break;
      }
    }

    const qreal D = qdist(c0, cp, d);
    QPoint u{};
    for (int a = 0; a < d; ++a) u[a] = (cp[a] - c0[a]) / D;
    const qreal z_lo = hub_r;       // distance of z_p from the hub center
    const qreal z_hi = D - leaf_r;  // distance of z'_p
    const qreal seg = z_hi - z_lo;
    const qreal r_p = seg / (2 * k);
    out.min_segment_len = std::min(out.min_segment_len, seg);
    out.max_segment_len = std::max(out.max_segment_len, seg);

    QPoint zp{}, zq{};
    for (int a = 0; a < d; ++a) {
      zp[a] = c0[a] + u[a] * z_lo;
      zq[a] = c0[a] + u[a] * z_hi;
    }
    segments.emplace_back(zp, zq);

    const std::uint32_t base = static_cast<std::uint32_t>(out.spheres.size());
    for (int i = 1; i <= k; ++i) {
      QPoint c{};
      qreal offset = z_lo + (2 * i - 1) * r_p;
      for (int a = 0; a < d; ++a) c[a] = c0[a] + u[a] * offset;
      out.spheres.push_back({c, r_p, SphereRole::kChain,
                             static_cast<std::uint32_t>(ci),
                             static_cast<std::uint32_t>(i)});
    }
    out.spheres.push_back(
        {cp, leaf_r, SphereRole::kLeaf, static_cast<std::uint32_t>(ci), 0});
    out.min_radius = std::min(out.min_radius, r_p);
    out.min_radius = std::min(out.min_radius, leaf_r);

    // hub - chain_1 - ... - chain_k - leaf
    out.tangencies.emplace_back(0, base);
    for (int i = 0; i + 1 < k; ++i)
      out.tangencies.emplace_back(base + i, base + i + 1);
    out.tangencies.emplace_back(base + k - 1, base + k);
  }

  out.min_interchain_gap = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      out.min_interchain_gap = std::min(
          out.min_interchain_gap,
          segment_distance(segments[i].first, segments[i].second,
                           segments[j].first, segments[j].second, d));
  return out;
}

SpherePacking sphere_pack(const CubePacking& packing) {
  if (!packing.neat)
    throw std::invalid_argument("sphere packing needs a neat cube packing");
  const int d = packing.cubes.dim();
  const Tiling& cubes = packing.cubes;

  SpherePacking sp;
  sp.dim = d;
  sp.cube_count = static_cast<std::uint32_t>(cubes.size());
  sp.cube_edges = packing.graph.graph.edges;
  sp.alpha = packing.aspect;
  sp.eps = Rational(1) / (Rational(2) * packing.aspect);

  // exact contact point per tangency edge: center of mass of the overlap
  const std::size_t m = packing.graph.edge_count();
  std::vector<std::vector<Rational>> contact_points(m);
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = packing.graph.graph.edges[e];
    const int ax = packing.graph.edge_dir[e];
    std::vector<Rational> pt(d);
    for (int a = 0; a < d; ++a) {
      if (a == ax) {
        // touching coordinate
        std::int64_t val =
            cubes.hi(u, a) == cubes.lo(v, a) ? cubes.hi(u, a) : cubes.hi(v, a);
        pt[a] = make_rational(val, cubes.den(a));
      } else {
        std::int64_t lo = std::max(cubes.lo(u, a), cubes.lo(v, a));
        std::int64_t hi = std::min(cubes.hi(u, a), cubes.hi(v, a));
        pt[a] = make_rational(lo + hi, 2 * cubes.den(a));
      }
    }
    contact_points[e] = std::move(pt);
  }

  // contacts per cube, in edge order
  std::vector<std::vector<std::uint32_t>> cube_contacts(cubes.size());
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = packing.graph.graph.edges[e];
    cube_contacts[u].push_back(static_cast<std::uint32_t>(e));
    cube_contacts[v].push_back(static_cast<std::uint32_t>(e));
  }

  // per (edge, cube) leaf ids for the fusing tangencies
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> leaf_id;

  int k_expected = -1;
  sp.cube_corner.resize(cubes.size() * d);
  sp.cube_side.resize(cubes.size());
  for (std::uint32_t c = 0; c < cubes.size(); ++c) {
    std::vector<Rational> corner(d);
    for (int a = 0; a < d; ++a) corner[a] = cubes.corner(c, a);
    Rational side = cubes.side(c, 0);
    for (int a = 0; a < d; ++a)
      sp.cube_corner[c * d + a] = to_qreal(corner[a]);
    sp.cube_side[c] = to_qreal(side);

    std::vector<ContactPoint> contacts;
    for (std::uint32_t e : cube_contacts[c])
      contacts.push_back({contact_points[e], e});

    StarResult star = star_spheres(d, corner, side, contacts, sp.eps);
    if (k_expected < 0) k_expected = star.chain_len;
    if (star.chain_len != k_expected)
      throw std::logic_error("chain length differs between cubes");

    const std::uint32_t offset = static_cast<std::uint32_t>(sp.size());
    for (std::size_t si = 0; si < star.spheres.size(); ++si) {
      const StarSphere& ss = star.spheres[si];
      for (int a = 0; a < d; ++a) sp.centers.push_back(ss.center[a]);
      sp.radii.push_back(ss.radius);
      std::uint32_t edge = ss.contact_index == UINT32_MAX
                               ? UINT32_MAX
                               : contacts[ss.contact_index].edge;
      sp.tags.push_back({c, ss.role, edge, ss.chain_pos});
      if (ss.role == SphereRole::kLeaf)
        leaf_id[{edge, c}] = offset + static_cast<std::uint32_t>(si);
    }
    for (auto [a, b] : star.tangencies)
      sp.tangencies.emplace_back(offset + a, offset + b);
  }
  sp.chain_len = k_expected < 0 ? 0 : k_expected;

  // fuse the stars: the two leaves of each edge meet at the contact point
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = packing.graph.graph.edges[e];
    std::uint32_t lu = leaf_id.at({static_cast<std::uint32_t>(e), u});
    std::uint32_t lv = leaf_id.at({static_cast<std::uint32_t>(e), v});
    sp.tangencies.emplace_back(std::min(lu, lv), std::max(lu, lv));
  }
  for (auto& [a, b] : sp.tangencies)
    if (a > b) std::swap(a, b);
  std::sort(sp.tangencies.begin(), sp.tangencies.end());
  return sp;
}

PackingReport validate_packing(const SpherePacking& s, double tol) {
  PackingReport rep;
  const int d = s.dim;
  const std::size_t n = s.size();
  const qreal qtol = tol;

  auto note = [&rep](const std::string& msg) {
    if (rep.violations.size() < 32) rep.violations.push_back(msg);
  };

  // expected graph: the (2k+3)-subdivision of the cube tangency graph
  {
    Graph cube_graph = Graph::from_edges(s.cube_count, s.cube_edges);
    const int msub = s.subdivision_order();
    Graph expected = subdivide(cube_graph, msub);
    if (expected.n != n) {
      rep.iso_ok = false;
      note("sphere count " + std::to_string(n) + " != subdivision order " +
           std::to_string(expected.n));
    } else {
      const int k = s.chain_len;
      auto map_sphere = [&](std::size_t i) -> std::uint32_t {
        const SphereTag& tag = s.tags[i];
        if (tag.role == SphereRole::kHub) return tag.cube;
        const auto& [u, v] = s.cube_edges[tag.edge];
        std::uint32_t base =
            s.cube_count + tag.edge * static_cast<std::uint32_t>(msub - 1);
        std::uint32_t t;
        if (tag.role == SphereRole::kLeaf)
          t = tag.cube == u ? k : k + 1;
        else
          t = tag.cube == u ? tag.chain_pos - 1 : 2 * k + 2 - tag.chain_pos;
        return base + t;
      };
      std::vector<std::pair<std::uint32_t, std::uint32_t>> mapped;
      mapped.reserve(s.tangencies.size());
      for (auto [a, b] : s.tangencies) {
        std::uint32_t x = map_sphere(a), y = map_sphere(b);
        mapped.emplace_back(std::min(x, y), std::max(x, y));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped != expected.edges) {
        rep.iso_ok = false;
        note("realized tangency graph is not the expected subdivision");
      }
    }
  }

  // declared tangencies: |dist - (ri+rj)| <= tol * (ri+rj)
  for (auto [a, b] : s.tangencies) {
    qreal dist = 0;
    for (int ax = 0; ax < d; ++ax) {
      qreal t = s.center_at(a, ax) - s.center_at(b, ax);
      dist += t * t;
    }
    dist = qsqrt(dist);
    qreal rsum = s.radii[a] + s.radii[b];
    qreal gap = qabs(dist - rsum) / rsum;
    rep.worst_tangency_gap =
        std::max(rep.worst_tangency_gap, to_double(gap));
    if (gap > qtol) {
      rep.tangency_ok = false;
      note("tangency (" + std::to_string(a) + "," + std::to_string(b) +
           ") violated: relative gap " + std::to_string(to_double(gap)));
    }
    qreal ratio = s.radii[a] / s.radii[b];
    if (ratio < 1) ratio = 1 / ratio;
    rep.M_realized = std::max(rep.M_realized, to_double(ratio));
  }

  // M-uniformity bound 120 alpha^2 d
  rep.M_bound = 120.0 * to_double(to_qreal(s.alpha)) *
                to_double(to_qreal(s.alpha)) * d;
  if (rep.M_realized > rep.M_bound) {
    rep.m_ok = false;
    note("tangent radius ratio " + std::to_string(rep.M_realized) +
         " exceeds 120 alpha^2 d = " + std::to_string(rep.M_bound));
  }

  // containment in the owning cube (leaves touch the boundary)
  for (std::uint32_t i = 0; i < n; ++i) {
    const SphereTag& tag = s.tags[i];
    for (int ax = 0; ax < d; ++ax) {
      qreal lo = s.cube_corner[tag.cube * d + ax];
      qreal hi = lo + s.cube_side[tag.cube];
      qreal slack = qtol * s.radii[i];
      if (s.center_at(i, ax) - s.radii[i] < lo - slack ||
          s.center_at(i, ax) + s.radii[i] > hi + slack) {
        rep.containment_ok = false;
        note("sphere " + std::to_string(i) + " leaves its cube");
        break;
      }
    }
  }

  // Pairwise disjointness. Containment plus interior-disjoint cubes already
  // separate spheres living in non-touching cubes, so only same-cube pairs
  // and pairs across touching cubes need sphere-level checks. All decisions
  // run on squared distances; square roots appear only in the report.
  if (n > 0) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> declared =
        s.tangencies;
    std::sort(declared.begin(), declared.end());
    auto is_declared = [&](std::uint32_t a, std::uint32_t b) {
      if (a > b) std::swap(a, b);
      return std::binary_search(declared.begin(), declared.end(),
                                std::make_pair(a, b));
    };

    qreal min_q_separated = std::numeric_limits<double>::max();
    const qreal lo_band = (1 - qtol) * (1 - qtol);
    const qreal hi_band = (1 + qtol) * (1 + qtol);
    auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
      qreal d2 = 0;
      for (int ax = 0; ax < d; ++ax) {
        qreal t = s.center_at(i, ax) - s.center_at(j, ax);
        d2 += t * t;
      }
      qreal rsum = s.radii[i] + s.radii[j];
      qreal q = d2 / (rsum * rsum);
      if (q < lo_band) {
        rep.disjoint_ok = false;
        note("spheres " + std::to_string(i) + "," + std::to_string(j) +
             " overlap: relative gap " +
             std::to_string(to_double(qsqrt(q) - 1)));
      }
      if (!is_declared(i, j)) {
        min_q_separated = std::min(min_q_separated, q);
        if (q <= hi_band) {
          rep.separated_ok = false;
          note("undeclared near-tangency between " + std::to_string(i) +
               " and " + std::to_string(j));
        }
      }
    };

    // spheres per cube
    std::vector<std::vector<std::uint32_t>> by_cube(s.cube_count);
    for (std::uint32_t i = 0; i < n; ++i) by_cube[s.tags[i].cube].push_back(i);

    for (std::uint32_t c = 0; c < s.cube_count; ++c)
      for (std::size_t a = 0; a < by_cube[c].size(); ++a)
        for (std::size_t b = a + 1; b < by_cube[c].size(); ++b)
          check_pair(by_cube[c][a], by_cube[c][b]);

    // touching cube pairs (closed intersection, corner contacts included)
    auto cubes_touch = [&](std::uint32_t a, std::uint32_t b) {
      for (int ax = 0; ax < d; ++ax) {
        qreal alo = s.cube_corner[a * d + ax];
        qreal blo = s.cube_corner[b * d + ax];
        if (std::max(alo, blo) >
            std::min(alo + s.cube_side[a], blo + s.cube_side[b]))
          return false;
      }
      return true;
    };
    auto near_shared_region = [&](std::uint32_t i, std::uint32_t other_cube,
                                  qreal reach) {
      // distance from sphere i's center to the other cube, minus radius
      qreal d2 = 0;
      for (int ax = 0; ax < d; ++ax) {
        qreal lo = s.cube_corner[other_cube * d + ax];
        qreal hi = lo + s.cube_side[other_cube];
        qreal c = s.center_at(i, ax);
        qreal gap = c < lo ? lo - c : (c > hi ? c - hi : 0);
        d2 += gap * gap;
      }
      qreal margin = s.radii[i] + reach;
      return d2 <= margin * margin;
    };
    for (std::uint32_t a = 0; a < s.cube_count; ++a) {
      for (std::uint32_t b = a + 1; b < s.cube_count; ++b) {
        if (!cubes_touch(a, b)) continue;
        qreal reach_b = s.cube_side[b] / 4;  // largest radius in cube b
        qreal reach_a = s.cube_side[a] / 4;
        for (std::uint32_t i : by_cube[a]) {
          if (!near_shared_region(i, b, reach_b)) continue;
          for (std::uint32_t j : by_cube[b]) {
            if (!near_shared_region(j, a, reach_a)) continue;
            check_pair(i, j);
          }
        }
      }
    }
    rep.min_pair_gap = min_q_separated ==
                               std::numeric_limits<double>::max()
                           ? std::numeric_limits<double>::max()
                           : to_double(qsqrt(min_q_separated) - 1);
  }

  // per-cube minimum radius against eps*l/(60d)
  {
    std::vector<qreal> min_r(s.cube_count,
                             std::numeric_limits<double>::max());
    for (std::uint32_t i = 0; i < n; ++i)
      min_r[s.tags[i].cube] = std::min(min_r[s.tags[i].cube], s.radii[i]);
    qreal eps_q = to_qreal(s.eps);
    double worst = std::numeric_limits<double>::max();
    for (std::uint32_t c = 0; c < s.cube_count; ++c) {
      qreal threshold = eps_q * s.cube_side[c] / (60 * d);
      worst = std::min(worst, to_double(min_r[c] / threshold));
    }
    rep.min_radius_ratio_60d = worst;
  }
  return rep;
}

}  // namespace tilings
