#pragma once

#include <cstdint>
#include <vector>

#include "hypercast/maxflow.hpp"
#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"

namespace hypercast {

// Node partition (S, T). Both sides sorted; together they cover 0..N-1.
struct CutPartition {
    std::vector<int> S;
    std::vector<int> T;
};

// Capacity of the cut: sum of rate(v) over v in S having a target in T.
// errors: rejects (S, T) that is not a partition of the node ids
std::int64_t cut_capacity(const std::vector<Hyperarc>& arcs, const RateAssignment& rates,
                          const CutPartition& cut);
std::int64_t cut_capacity(const Network& net, const RateAssignment& rates,
                          const CutPartition& cut);

// Flow graph for the reduction. Node v splits into vertex v (entry) and
// vertex N+v (its transmission): v -> N+v carries rate(v), and N+v -> u
// carries `big` for every u the node reaches. Every finite-capacity s-t cut
// then selects exactly the entry arcs of a node cut.
struct FlowNetwork {
    int node_count = 0;
    std::int64_t big = 0;  // 1 + total rate: never part of a minimum cut
    MaxFlow graph;

    int entry_vertex(int v) const { return v; }
    int transmit_vertex(int v) const { return node_count + v; }
};

FlowNetwork build_flow_network(const std::vector<Hyperarc>& arcs, const RateAssignment& rates);
FlowNetwork build_flow_network(const Network& net, const RateAssignment& rates);

struct MinCut {
    std::int64_t value = 0;
    CutPartition witness;  // realizes value: cut_capacity(witness) == value
};

// Minimum-capacity cut separating s from t.
// pre: s != t, both valid ids
MinCut min_cut_st(const Network& net, const RateAssignment& rates, int s, int t);

struct BroadcastMinCut {
    std::int64_t value = 0;
    int argmin_dest = -1;
    bool estimate = false;  // true when only a sample of destinations was scanned
};

// min over t != s of the s-t cut value. Destination order cannot change the
// value; ties on the reported argmin resolve by scan order, which is fixed.
BroadcastMinCut min_cut_broadcast(const Network& net, const RateAssignment& rates, int s);

// Same, but scanning `sample_count` destinations drawn from the seed. The
// result is an upper estimate of the true broadcast min-cut.
BroadcastMinCut min_cut_broadcast_sampled(const Network& net, const RateAssignment& rates, int s,
                                          int sample_count, std::uint64_t seed);

// Exhaustive minimum over all node partitions with s on the left and t on
// the right. Oracle-grade, exponential.
// errors: rejects networks with more than 20 nodes
std::int64_t brute_force_min_cut(const Network& net, const RateAssignment& rates, int s, int t);

// Smallest neighborhood rate sum over destinations t != s: an upper bound
// on the broadcast min-cut (the cut that isolates t).
std::int64_t weakest_destination_bound(const std::vector<Hyperarc>& arcs,
                                       const RateAssignment& rates, int s);

}  // namespace hypercast
