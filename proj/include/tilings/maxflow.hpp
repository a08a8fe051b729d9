#pragma once

#include <cstdint>
#include <vector>

namespace tilings {

// Dinic max-flow on an explicit arc list. Deterministic: arcs are explored
// in insertion order, so identical inputs give identical flows and cuts.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::uint32_t n) : adj_(n) {}

  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(adj_.size());
  }

  // Returns the arc id; the reverse arc is id^1.
  std::size_t add_arc(std::uint32_t from, std::uint32_t to, std::int64_t cap);

  std::int64_t max_flow(std::uint32_t s, std::uint32_t t);

  // After max_flow: vertices reachable from s in the residual network.
  std::vector<bool> residual_reachable(std::uint32_t s) const;

  std::int64_t arc_flow(std::size_t arc) const { return arcs_[arc].flow; }
  std::uint32_t arc_to(std::size_t arc) const { return arcs_[arc].to; }
  std::size_t arc_count() const { return arcs_.size(); }

  // Consumes the computed flow, returning unit s-t paths (node sequences).
  // Stray flow cycles are cancelled, not reported.
  std::vector<std::vector<std::uint32_t>> extract_unit_paths(std::uint32_t s,
                                                             std::uint32_t t);

 private:
  struct Arc {
    std::uint32_t to;
    std::int64_t cap;
    std::int64_t flow;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::uint32_t>> adj_;

  bool bfs_levels(std::uint32_t s, std::uint32_t t,
                  std::vector<std::int32_t>& level) const;
  std::int64_t dfs_push(std::uint32_t v, std::uint32_t t, std::int64_t limit,
                        const std::vector<std::int32_t>& level,
                        std::vector<std::uint32_t>& iter);
};

}  // namespace tilings
