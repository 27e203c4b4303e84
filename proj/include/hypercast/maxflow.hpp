#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hypercast {

// Dinic max-flow on integer capacities. Exact and deterministic: arcs are
// scanned in insertion order, so equal-value flows are always routed the
// same way.
class MaxFlow {
  public:
    static constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max();

    explicit MaxFlow(int vertex_count);

    // Directed arc with the given capacity; the paired reverse arc starts at
    // 0. Returns the arc id (reverse is id^1).
    int add_arc(int from, int to, std::int64_t capacity);

    // Maximum s-t flow, stopping early once the total reaches `limit` (the
    // returned value never exceeds it). A truncated run proves only that the
    // true max flow is >= limit.
    std::int64_t run(int s, int t, std::int64_t limit = kNoLimit);

    // Restores all capacities; topology is kept.
    void reset();

    // After run(): vertices reachable from s in the residual graph. The
    // arcs crossing out of this set form a minimum cut.
    std::vector<char> source_side(int s) const;

    std::int64_t residual(int arc) const { return arcs_[static_cast<std::size_t>(arc)].cap; }
    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size() / 2); }  // forward arcs only

  private:
    struct Arc {
        int to = 0;
        std::int64_t cap = 0;  // residual capacity
    };

    bool bfs_levels(int s, int t);
    std::int64_t push(int v, int t, std::int64_t budget);

    std::vector<Arc> arcs_;
    std::vector<std::int64_t> initial_cap_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> level_;
    std::vector<std::size_t> next_arc_;
};

}  // namespace hypercast
