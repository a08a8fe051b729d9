#include "tilings/tangency.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace tilings {

namespace {

using EdgeRec = std::tuple<std::uint32_t, std::uint32_t, std::uint8_t>;

// Bipartite join of upper faces against lower faces sharing one coordinate
// on the touch axis: emits pairs whose open intervals overlap on every other
// axis. Recurses axis by axis; clusters of identical intervals recurse
// cheaply, irregular overlap clusters fall back to exact pairwise checks.
struct FaceJoin {
  const Tiling* t;
  int touch_axis;
  std::vector<int> other_axes;
  std::vector<EdgeRec>* out;

  bool open_overlap_all(std::uint32_t a, std::uint32_t b) const {
    for (int ax : other_axes) {
      std::int64_t lo = std::max(t->lo(a, ax), t->lo(b, ax));
      std::int64_t hi = std::min(t->hi(a, ax), t->hi(b, ax));
      if (lo >= hi) return false;
    }
    return true;
  }

  void emit(std::uint32_t upper, std::uint32_t lower) {
    out->emplace_back(std::min(upper, lower), std::max(upper, lower),
                      static_cast<std::uint8_t>(touch_axis));
  }

  struct Item {
    std::int64_t lo, hi;
    std::uint32_t tile;
    bool upper;
  };

  void run(std::vector<std::uint32_t>& uppers,
           std::vector<std::uint32_t>& lowers, std::size_t pos) {
    if (uppers.empty() || lowers.empty()) return;
    if (pos == other_axes.size()) {
      for (std::uint32_t u : uppers)
        for (std::uint32_t l : lowers) emit(u, l);
      return;
    }
    const int ax = other_axes[pos];
    std::vector<Item> items;
    items.reserve(uppers.size() + lowers.size());
    for (std::uint32_t u : uppers)
      items.push_back({t->lo(u, ax), t->hi(u, ax), u, true});
    for (std::uint32_t l : lowers)
      items.push_back({t->lo(l, ax), t->hi(l, ax), l, false});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      if (a.hi != b.hi) return a.hi < b.hi;
      return a.tile < b.tile;
    });

    std::size_t start = 0;
    while (start < items.size()) {
      std::int64_t run_hi = items[start].hi;
      bool identical = true;
      std::size_t end = start + 1;
      while (end < items.size() && items[end].lo < run_hi) {
        identical = identical && items[end].lo == items[start].lo &&
                    items[end].hi == items[start].hi;
        run_hi = std::max(run_hi, items[end].hi);
        ++end;
      }
      std::vector<std::uint32_t> u2, l2;
      for (std::size_t i = start; i < end; ++i)
        (items[i].upper ? u2 : l2).push_back(items[i].tile);
      if (!u2.empty() && !l2.empty()) {
        if (identical) {
          run(u2, l2, pos + 1);
        } else {
          for (std::uint32_t u : u2)
            for (std::uint32_t l : l2)
              if (open_overlap_all(u, l)) emit(u, l);
        }
      }
      start = end;
    }
  }
};

TangencyGraph finish_graph(const Tiling& t, std::vector<EdgeRec> recs,
                           bool require_connected) {
  std::sort(recs.begin(), recs.end());
  recs.erase(std::unique(recs.begin(), recs.end()), recs.end());

  TangencyGraph tg;
  tg.dim = t.dim();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(recs.size());
  tg.edge_dir.reserve(recs.size());
  for (const auto& [u, v, dir] : recs) {
    edges.emplace_back(u, v);
    tg.edge_dir.push_back(dir);
  }
  tg.graph = Graph::from_edges(static_cast<std::uint32_t>(t.size()),
                               std::move(edges));
  if (require_connected && !is_connected(tg.graph))
    throw std::runtime_error("tangency graph is disconnected");
  return tg;
}

}  // namespace

TangencyGraph build_tangency_graph(const Tiling& t, bool require_connected) {
  const int d = t.dim();
  const std::size_t n = t.size();
  std::vector<EdgeRec> recs;

  struct Face {
    std::int64_t value;
    std::uint32_t tile;
    bool upper;
  };
  std::vector<Face> faces(2 * n);
  for (int ax = 0; ax < d; ++ax) {
    for (std::size_t i = 0; i < n; ++i) {
      faces[2 * i] = {t.hi(i, ax), static_cast<std::uint32_t>(i), true};
      faces[2 * i + 1] = {t.lo(i, ax), static_cast<std::uint32_t>(i), false};
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.upper != b.upper) return a.upper;
      return a.tile < b.tile;
    });

    FaceJoin join{&t, ax, {}, &recs};
    for (int j = 0; j < d; ++j)
      if (j != ax) join.other_axes.push_back(j);

    std::size_t start = 0;
    while (start < faces.size()) {
      std::size_t end = start;
      while (end < faces.size() && faces[end].value == faces[start].value)
        ++end;
      std::vector<std::uint32_t> uppers, lowers;
      for (std::size_t i = start; i < end; ++i)
        (faces[i].upper ? uppers : lowers).push_back(faces[i].tile);
      join.run(uppers, lowers, 0);
      start = end;
    }
  }
  return finish_graph(t, std::move(recs), require_connected);
}

TangencyGraph brute_force_tangency(const Tiling& t, std::size_t guard,
                                   bool require_connected) {
  const std::size_t n = t.size();
  if (n > guard)
    throw std::invalid_argument("brute-force tangency guard exceeded: " +
                                std::to_string(n) + " > " +
                                std::to_string(guard));
  const int d = t.dim();
  std::vector<EdgeRec> recs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int touch_axis = -1;
      int touch_count = 0;
      bool open_all = true;
      for (int ax = 0; ax < d && open_all; ++ax) {
        std::int64_t lo = std::max(t.lo(i, ax), t.lo(j, ax));
        std::int64_t hi = std::min(t.hi(i, ax), t.hi(j, ax));
        if (lo > hi) {
          open_all = false;  // separated on this axis
        } else if (lo == hi) {
          ++touch_count;
          touch_axis = ax;
        }
      }
      if (open_all && touch_count == 1)
        recs.emplace_back(static_cast<std::uint32_t>(i),
                          static_cast<std::uint32_t>(j),
                          static_cast<std::uint8_t>(touch_axis));
    }
  }
  return finish_graph(t, std::move(recs), require_connected);
}

bool same_labeled_edges(const TangencyGraph& a, const TangencyGraph& b) {
  if (a.graph.n != b.graph.n || a.dim != b.dim) return false;
  if (a.graph.edges != b.graph.edges) return false;
  return a.edge_dir == b.edge_dir;
}

AlphaStats alpha_stats(const Tiling& t, const TangencyGraph& g) {
  const int d = t.dim();
  AlphaStats st;

  // ratio maxima tracked as int64 pairs; lengths share per-axis denominators
  std::vector<std::pair<std::int64_t, std::int64_t>> best(
      d, {1, 1});  // num/den per direction
  auto consider = [&](int dir, std::int64_t num, std::int64_t den) {
    auto& [bn, bd] = best[dir];
    if (static_cast<__int128>(num) * bd > static_cast<__int128>(bn) * den) {
      bn = num;
      bd = den;
    }
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.graph.edges[e];
    int dir = g.edge_dir[e];
    for (int ax = 0; ax < d; ++ax) {
      consider(dir, t.len(u, ax), t.len(v, ax));
      consider(dir, t.len(v, ax), t.len(u, ax));
    }
  }
  st.alpha_per_dir.reserve(d);
  st.alpha = Rational(1);
  for (int i = 0; i < d; ++i) {
    Rational r = make_rational(best[i].first, best[i].second);
    st.alpha_per_dir.push_back(r);
    if (r > st.alpha) st.alpha = r;
  }

  std::vector<std::int64_t> max_len(d, 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int ax = 0; ax < d; ++ax)
      max_len[ax] = std::max(max_len[ax], t.len(i, ax));
  st.max_side = Rational(0);
  for (int ax = 0; ax < d; ++ax) {
    Rational r = make_rational(max_len[ax], t.den(ax));
    if (r > st.max_side) st.max_side = r;
  }

  for (std::uint32_t v = 0; v < g.graph.n; ++v) {
    if (g.graph.degree(v) > st.max_degree) {
      st.max_degree = g.graph.degree(v);
      st.max_degree_vertex = v;
    }
  }
  return st;
}

DegreeBoundCheck check_degree_bound(const Tiling& t, const TangencyGraph& g) {
  AlphaStats st = alpha_stats(t, g);
  DegreeBoundCheck out;
  const int d = t.dim();
  Rational bound = rational_pow(st.alpha, static_cast<unsigned long>(2 * d));
  bound *= Rational(BigInt(bigint_pow(BigInt(3), d)), BigInt(1));
  out.bound = bound;
  out.max_degree = st.max_degree;
  out.witness = st.max_degree_vertex;
  out.ok = Rational(static_cast<long>(st.max_degree)) <= bound;
  return out;
}

}  // namespace tilings
