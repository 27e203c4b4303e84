#include "hypercast/mincut.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hypercast/rng.hpp"

namespace hypercast {

namespace {

void check_rates(const std::vector<Hyperarc>& arcs, const RateAssignment& rates) {
    if (rates.rate.size() != arcs.size())
        throw std::invalid_argument("rate assignment does not match the network");
    for (std::int64_t r : rates.rate)
        if (r < 1) throw std::invalid_argument("rates must be >= 1");
}

// Membership vector for T; throws unless (S, T) partitions 0..n-1.
std::vector<char> t_membership(int n, const CutPartition& cut) {
    if (cut.S.empty() || cut.T.empty())
        throw std::invalid_argument("cut_capacity: both cut sides must be nonempty");
    if (cut.S.size() + cut.T.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("cut_capacity: cut does not cover the node set");
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cut.S) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("cut_capacity: invalid or repeated id in S");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : cut.T) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("cut_capacity: invalid or repeated id in T");
        seen[static_cast<std::size_t>(v)] = 1;
        in_t[static_cast<std::size_t>(v)] = 1;
    }
    return in_t;
}

// Destinations in ascending order of the cut that isolates them, so the
// cheapest candidates are scanned first and later runs abort early.
std::vector<int> ordered_destinations(const std::vector<Hyperarc>& arcs,
                                      const RateAssignment& rates, int s,
                                      const std::vector<int>& candidates) {
    std::vector<std::pair<std::int64_t, int>> keyed;
    keyed.reserve(candidates.size());
    for (int t : candidates) {
        if (t == s) continue;
        std::int64_t isolation = 0;
        for (int v : arcs[static_cast<std::size_t>(t)].targets)
            isolation += rates.rate[static_cast<std::size_t>(v)];
        keyed.emplace_back(isolation, t);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order;
    order.reserve(keyed.size());
    for (const auto& [key, t] : keyed) order.push_back(t);
    return order;
}

BroadcastMinCut scan_destinations(const std::vector<Hyperarc>& arcs, const RateAssignment& rates,
                                  int s, const std::vector<int>& candidates) {
    FlowNetwork fn = build_flow_network(arcs, rates);
    BroadcastMinCut best;
    best.value = MaxFlow::kNoLimit;
    for (int t : ordered_destinations(arcs, rates, s, candidates)) {
        fn.graph.reset();
        const std::int64_t value =
            fn.graph.run(fn.entry_vertex(s), fn.entry_vertex(t), best.value);
        if (value < best.value) {
            best.value = value;
            best.argmin_dest = t;
        }
        if (best.value == 0) break;  // nothing can be cheaper
    }
    return best;
}

}  // namespace

std::int64_t cut_capacity(const std::vector<Hyperarc>& arcs, const RateAssignment& rates,
                          const CutPartition& cut) {
    check_rates(arcs, rates);
    const auto in_t = t_membership(static_cast<int>(arcs.size()), cut);
    std::int64_t capacity = 0;
    for (int v : cut.S) {
        for (int u : arcs[static_cast<std::size_t>(v)].targets) {
            if (in_t[static_cast<std::size_t>(u)]) {
                capacity += rates.rate[static_cast<std::size_t>(v)];
                break;
            }
        }
    }
    return capacity;
}

std::int64_t cut_capacity(const Network& net, const RateAssignment& rates,
                          const CutPartition& cut) {
    return cut_capacity(build_hyperarcs(net), rates, cut);
}

FlowNetwork build_flow_network(const std::vector<Hyperarc>& arcs, const RateAssignment& rates) {
    check_rates(arcs, rates);
    const int n = static_cast<int>(arcs.size());
    std::int64_t total = 0;
    for (std::int64_t r : rates.rate) total += r;

    FlowNetwork fn{n, total + 1, MaxFlow(2 * n)};
    for (int v = 0; v < n; ++v)
        fn.graph.add_arc(fn.entry_vertex(v), fn.transmit_vertex(v),
                         rates.rate[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n; ++v)
        for (int u : arcs[static_cast<std::size_t>(v)].targets)
            fn.graph.add_arc(fn.transmit_vertex(v), fn.entry_vertex(u), fn.big);
    return fn;
}

FlowNetwork build_flow_network(const Network& net, const RateAssignment& rates) {
    return build_flow_network(build_hyperarcs(net), rates);
}

MinCut min_cut_st(const Network& net, const RateAssignment& rates, int s, int t) {
    const int n = net.size();
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
        throw std::invalid_argument("min_cut_st: s and t must be distinct valid ids");
    FlowNetwork fn = build_flow_network(net, rates);
    MinCut result;
    result.value = fn.graph.run(fn.entry_vertex(s), fn.entry_vertex(t));

    // Entry arcs with a saturated tail vertex reachable from s form the cut;
    // projecting reachability onto entry vertices yields a witness of the
    // same capacity.
    const auto reachable = fn.graph.source_side(fn.entry_vertex(s));
    for (int v = 0; v < n; ++v) {
        if (reachable[static_cast<std::size_t>(fn.entry_vertex(v))])
            result.witness.S.push_back(v);
        else
            result.witness.T.push_back(v);
    }
    return result;
}

BroadcastMinCut min_cut_broadcast(const Network& net, const RateAssignment& rates, int s) {
    const int n = net.size();
    if (s < 0 || s >= n) throw std::invalid_argument("min_cut_broadcast: invalid source id");
    if (n < 2) throw std::invalid_argument("min_cut_broadcast: need at least two nodes");
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return scan_destinations(build_hyperarcs(net), rates, s, all);
}

BroadcastMinCut min_cut_broadcast_sampled(const Network& net, const RateAssignment& rates, int s,
                                          int sample_count, std::uint64_t seed) {
    const int n = net.size();
    if (s < 0 || s >= n)
        throw std::invalid_argument("min_cut_broadcast_sampled: invalid source id");
    if (sample_count < 1)
        throw std::invalid_argument("min_cut_broadcast_sampled: sample count must be >= 1");
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n) - 1);
    for (int t = 0; t < n; ++t)
        if (t != s) pool.push_back(t);

    const bool full = sample_count >= static_cast<int>(pool.size());
    if (!full) {
        Rng rng(seed);
        for (int i = 0; i < sample_count; ++i) {
            const auto j = i + static_cast<int>(rng.next_below(pool.size() - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        pool.resize(static_cast<std::size_t>(sample_count));
    }
    BroadcastMinCut result = scan_destinations(build_hyperarcs(net), rates, s, pool);
    result.estimate = !full;
    return result;
}

std::int64_t brute_force_min_cut(const Network& net, const RateAssignment& rates, int s, int t) {
    const int n = net.size();
    if (n > 20) throw std::invalid_argument("brute_force_min_cut: limited to 20 nodes");
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
        throw std::invalid_argument("brute_force_min_cut: s and t must be distinct valid ids");
    const auto arcs = build_hyperarcs(net);
    check_rates(arcs, rates);

    std::vector<int> middle;
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) middle.push_back(v);

    std::int64_t best = MaxFlow::kNoLimit;
    const std::uint32_t subsets = 1u << middle.size();
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    for (std::uint32_t pick = 0; pick < subsets; ++pick) {
        std::fill(in_t.begin(), in_t.end(), 0);
        in_t[static_cast<std::size_t>(t)] = 1;
        for (std::size_t i = 0; i < middle.size(); ++i)
            if (pick & (1u << i)) in_t[static_cast<std::size_t>(middle[i])] = 1;

        std::int64_t capacity = 0;
        for (int v = 0; v < n; ++v) {
            if (in_t[static_cast<std::size_t>(v)]) continue;
            for (int u : arcs[static_cast<std::size_t>(v)].targets) {
                if (in_t[static_cast<std::size_t>(u)]) {
                    capacity += rates.rate[static_cast<std::size_t>(v)];
                    break;
                }
            }
        }
        best = std::min(best, capacity);
    }
    return best;
}

std::int64_t weakest_destination_bound(const std::vector<Hyperarc>& arcs,
                                       const RateAssignment& rates, int s) {
    check_rates(arcs, rates);
    std::int64_t best = MaxFlow::kNoLimit;
    for (int t = 0; t < static_cast<int>(arcs.size()); ++t) {
        if (t == s) continue;
        std::int64_t isolation = 0;
        for (int v : arcs[static_cast<std::size_t>(t)].targets)
            isolation += rates.rate[static_cast<std::size_t>(v)];
        best = std::min(best, isolation);
    }
    return best;
}

}  // namespace hypercast
