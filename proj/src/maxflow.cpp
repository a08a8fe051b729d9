#include "tilings/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tilings {

std::size_t FlowNetwork::add_arc(std::uint32_t from, std::uint32_t to,
                                 std::int64_t cap) {
  if (from >= adj_.size() || to >= adj_.size())
    throw std::invalid_argument("flow arc endpoint out of range");
  std::size_t id = arcs_.size();
  arcs_.push_back({to, cap, 0});
  arcs_.push_back({from, 0, 0});
  adj_[from].push_back(static_cast<std::uint32_t>(id));
  adj_[to].push_back(static_cast<std::uint32_t>(id + 1));
  return id;
}

bool FlowNetwork::bfs_levels(std::uint32_t s, std::uint32_t t,
                             std::vector<std::int32_t>& level) const {
  std::fill(level.begin(), level.end(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(adj_.size());
  level[s] = 0;
  queue.push_back(s);
  std::size_t head = 0;
  while (head < queue.size()) {
    std::uint32_t v = queue[head++];
    for (std::uint32_t a : adj_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && level[arc.to] < 0) {
        level[arc.to] = level[v] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level[t] >= 0;
}

std::int64_t FlowNetwork::dfs_push(std::uint32_t v, std::uint32_t t,
                                   std::int64_t limit,
                                   const std::vector<std::int32_t>& level,
                                   std::vector<std::uint32_t>& iter) {
  if (v == t) return limit;
  for (std::uint32_t& i = iter[v]; i < adj_[v].size(); ++i) {
    std::uint32_t a = adj_[v][i];
    Arc& arc = arcs_[a];
    std::int64_t residual = arc.cap - arc.flow;
    if (residual <= 0 || level[arc.to] != level[v] + 1) continue;
    std::int64_t pushed =
        dfs_push(arc.to, t, std::min(limit, residual), level, iter);
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[a ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(std::uint32_t s, std::uint32_t t) {
  if (s == t) throw std::invalid_argument("flow source equals sink");
  std::int64_t total = 0;
  std::vector<std::int32_t> level(adj_.size());
  std::vector<std::uint32_t> iter(adj_.size());
  while (bfs_levels(s, t, level)) {
    std::fill(iter.begin(), iter.end(), 0u);
    while (std::int64_t pushed = dfs_push(
               s, t, std::numeric_limits<std::int64_t>::max(), level, iter))
      total += pushed;
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(std::uint32_t s) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<std::uint32_t> queue{s};
  seen[s] = true;
  std::size_t head = 0;
  while (head < queue.size()) {
    std::uint32_t v = queue[head++];
    for (std::uint32_t a : adj_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.cap - arc.flow > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

std::vector<std::vector<std::uint32_t>> FlowNetwork::extract_unit_paths(
    std::uint32_t s, std::uint32_t t) {
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::uint32_t> iter(adj_.size(), 0);
  while (true) {
    std::vector<std::uint32_t> walk{s};
    std::vector<std::uint32_t> walk_arcs;
    std::vector<bool> on_walk(adj_.size(), false);
    on_walk[s] = true;
    std::uint32_t v = s;
    bool dead_end = false;
    while (v != t) {
      std::uint32_t* next_arc = nullptr;
      for (std::uint32_t& i = iter[v]; i < adj_[v].size(); ++i) {
        std::uint32_t a = adj_[v][i];
        if ((a & 1u) == 0 && arcs_[a].flow > 0) {
          next_arc = &adj_[v][i];
          break;
        }
      }
      if (!next_arc) {
        dead_end = true;
        break;
      }
      std::uint32_t a = *next_arc;
      std::uint32_t w = arcs_[a].to;
      if (on_walk[w]) {
        // cancel the stray cycle w -> ... -> v -> w
        while (walk.back() != w) {
          arcs_[walk_arcs.back()].flow -= 1;
          arcs_[walk_arcs.back() ^ 1].flow += 1;
          on_walk[walk.back()] = false;
          walk.pop_back();
          walk_arcs.pop_back();
        }
        arcs_[a].flow -= 1;
        arcs_[a ^ 1].flow += 1;
        v = w;
        continue;
      }
      arcs_[a].flow -= 1;
      arcs_[a ^ 1].flow += 1;
      walk.push_back(w);
      walk_arcs.push_back(a);
      on_walk[w] = true;
      v = w;
    }
    if (dead_end) break;
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace tilings
