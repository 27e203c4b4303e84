#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doctest.h"

#include "hypercast/mincut.hpp"
#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"
#include "hypercast/rng.hpp"

using namespace hypercast;

namespace {

int id_of(int x, int y, int L) { return x * L + y; }

CutPartition partition_by(const Network& net, bool (*left)(const Point&)) {
    CutPartition cut;
    for (int v = 0; v < net.size(); ++v) {
        if (left(net.nodes[static_cast<std::size_t>(v)]))
            cut.S.push_back(v);
        else
            cut.T.push_back(v);
    }
    return cut;
}

// hand-built two/three node chains for oracle cases
Network chain_network(std::initializer_list<Point> points) {
    Network net;
    net.kind = NetKind::disk;
    net.L = 10.0;
    net.rho = 1.0;
    net.W = 2.0;
    net.nodes = points;
    net.source_id = 0;
    return net;
}

RateAssignment explicit_rates(std::vector<std::int64_t> rates, int source) {
    RateAssignment out;
    out.boosted_rate = *std::max_element(rates.begin(), rates.end());
    out.rate = std::move(rates);
    out.source_id = source;
    return out;
}

Network random_connected_disk(Rng& rng, int min_n, int max_n) {
    while (true) {
        const int n = min_n + static_cast<int>(rng.next_below(
                                  static_cast<std::uint64_t>(max_n - min_n + 1)));
        const Network net =
            generate_random_disk(n, 4.0, 1.5, 1.6, rng.next_u64());
        if (is_connected(net)) return net;
    }
}

RateAssignment random_rates(Rng& rng, const Network& net, int lo, int hi) {
    std::vector<std::int64_t> rates(static_cast<std::size_t>(net.size()));
    for (auto& r : rates)
        r = lo + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    return explicit_rates(std::move(rates), net.source_id);
}

}  // namespace

TEST_CASE("cut capacity on pinned lattice cuts") {
    Network net = generate_lattice(10, 1.0, 2.0);
    net.source_id = id_of(5, 5, 10);
    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);

    CutPartition only_source;
    only_source.S.push_back(net.source_id);
    for (int v = 0; v < net.size(); ++v)
        if (v != net.source_id) only_source.T.push_back(v);
    CHECK(cut_capacity(arcs, rates, only_source) == 4);  // the source alone crosses

    CutPartition all_but_target;
    const int target = id_of(4, 4, 10);
    for (int v = 0; v < net.size(); ++v)
        if (v != target) all_but_target.S.push_back(v);
    all_but_target.T.push_back(target);
    CHECK(cut_capacity(arcs, rates, all_but_target) == 4);  // four rate-1 neighbors

    const CutPartition halves =
        partition_by(net, [](const Point& p) { return p.x <= 4.0; });
    std::int64_t recount = 0;  // independent recount of the crossing column
    for (int y = 0; y < 10; ++y)
        recount += rates.rate[static_cast<std::size_t>(id_of(4, y, 10))];
    const std::int64_t cap = cut_capacity(arcs, rates, halves);
    CHECK(cap == recount);
    CHECK(cap >= 4);
    CHECK(cut_capacity(net, rates, halves) == cap);  // convenience overload agrees
}

TEST_CASE("cut capacity rejects non-partitions") {
    const Network net = generate_lattice(4, 1.0, 1.5);
    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);

    CutPartition overlap{{0, 1, 2}, {2, 3}};
    CHECK_THROWS_AS(cut_capacity(arcs, rates, overlap), std::invalid_argument);
    CutPartition missing{{0, 1}, {3}};
    CHECK_THROWS_AS(cut_capacity(arcs, rates, missing), std::invalid_argument);
    CutPartition empty_side{{}, {0, 1, 2, 3}};
    CHECK_THROWS_AS(cut_capacity(arcs, rates, empty_side), std::invalid_argument);
    CutPartition out_of_range{{0, 1, 99}, {2, 3}};
    CHECK_THROWS_AS(cut_capacity(arcs, rates, out_of_range), std::invalid_argument);
}

TEST_CASE("every nonempty crossing costs at least the node count crossing it") {
    Rng rng(4242);
    const Network net = generate_random_disk(40, 6.0, 1.2, 1.4, 77);
    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);
    for (int round = 0; round < 25; ++round) {
        CutPartition cut;
        for (int v = 0; v < net.size(); ++v)
            (rng.next_unit() < 0.5 ? cut.S : cut.T).push_back(v);
        if (cut.S.empty() || cut.T.empty()) continue;

        std::vector<char> in_t(static_cast<std::size_t>(net.size()), 0);
        for (int v : cut.T) in_t[static_cast<std::size_t>(v)] = 1;
        std::int64_t crossing = 0;
        for (int v : cut.S)
            for (int u : arcs[static_cast<std::size_t>(v)].targets)
                if (in_t[static_cast<std::size_t>(u)]) {
                    ++crossing;
                    break;
                }
        CHECK(cut_capacity(arcs, rates, cut) >= crossing);  // rates are >= 1
    }
}

TEST_CASE("flow network shape matches the reduction") {
    const Network net = generate_lattice(3, 1.0, 1.2);
    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);
    const FlowNetwork fn = build_flow_network(arcs, rates);

    CHECK(fn.node_count == 9);
    CHECK(fn.graph.vertex_count() == 18);
    std::size_t reach_arcs = 0;
    for (const Hyperarc& arc : arcs) reach_arcs += arc.targets.size();
    CHECK(reach_arcs == 24);
    CHECK(fn.graph.arc_count() == 9 + 24);
    CHECK(fn.big == total_rate(rates) + 1);

    // entry arcs carry exactly the rates (added first, two slots per arc)
    for (int v = 0; v < net.size(); ++v)
        CHECK(fn.graph.residual(2 * v) == rates.rate[static_cast<std::size_t>(v)]);
}

TEST_CASE("lattice min-cuts equal the interior degree") {
    struct Config {
        int L;
        double rho, W;
        std::int64_t expected;
    };
    for (const Config& cfg : {Config{8, 1.0, 1.5, 4}, Config{10, 1.0, 2.0, 4},
                              Config{9, 1.0, 2.0, 4}, Config{12, 2.0, 3.0, 12}}) {
        const Network net = generate_lattice(cfg.L, cfg.rho, cfg.W);
        const RateAssignment rates = assign_rates(net);
        CHECK(rates.boosted_rate == cfg.expected);

        Rng rng(static_cast<std::uint64_t>(cfg.L));
        for (int round = 0; round < 4; ++round) {
            const int s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(net.size())));
            int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(net.size() - 1)));
            if (t >= s) ++t;
            Network seeded = net;
            seeded.source_id = s;
            const RateAssignment r2 = assign_rates(seeded);
            const MinCut cut = min_cut_st(seeded, r2, s, t);
            CHECK(cut.value == cfg.expected);
            CHECK(cut_capacity(seeded, r2, cut.witness) == cut.value);
        }
        CHECK(min_cut_broadcast(net, rates, net.source_id).value == cfg.expected);
    }
}

TEST_CASE("broadcast min-cut scans destinations without order effects") {
    const Network net = generate_random_disk(150, 8.0, 1.0, 1.5, 21);
    const RateAssignment rates = assign_rates(net);
    const BroadcastMinCut fast = min_cut_broadcast(net, rates, net.source_id);

    std::int64_t reference = MaxFlow::kNoLimit;
    int argmin = -1;
    for (int t = 0; t < net.size(); ++t) {
        if (t == net.source_id) continue;
        const std::int64_t value = min_cut_st(net, rates, net.source_id, t).value;
        if (value < reference) {
            reference = value;
            argmin = t;
        }
    }
    CHECK(fast.value == reference);
    CHECK(min_cut_st(net, rates, net.source_id, fast.argmin_dest).value == fast.value);
    CHECK(min_cut_st(net, rates, net.source_id, argmin).value == reference);
    CHECK_FALSE(fast.estimate);

    const auto arcs = build_hyperarcs(net);
    CHECK(fast.value <= weakest_destination_bound(arcs, rates, net.source_id));
}

TEST_CASE("sampled destination scan is an upper estimate") {
    const Network net = generate_random_disk(120, 8.0, 1.0, 1.5, 33);
    const RateAssignment rates = assign_rates(net);
    const BroadcastMinCut full = min_cut_broadcast(net, rates, net.source_id);
    const BroadcastMinCut sampled =
        min_cut_broadcast_sampled(net, rates, net.source_id, 10, 5);
    CHECK(sampled.estimate);
    CHECK(sampled.value >= full.value);
    const BroadcastMinCut everything =
        min_cut_broadcast_sampled(net, rates, net.source_id, net.size() - 1, 5);
    CHECK_FALSE(everything.estimate);
    CHECK(everything.value == full.value);
}

TEST_CASE("disconnected networks cut at zero") {
    // find a seed with an unreachable node
    for (std::uint64_t seed = 1;; ++seed) {
        REQUIRE(seed < 500);
        const Network net = generate_random_disk(12, 12.0, 1.1, 1.3, seed);
        if (is_connected(net)) continue;
        const RateAssignment rates = explicit_rates(
            std::vector<std::int64_t>(static_cast<std::size_t>(net.size()), 2), net.source_id);
        CHECK(min_cut_broadcast(net, rates, net.source_id).value == 0);
        break;
    }
}

TEST_CASE("three node chain cuts at the weak relay") {
    const Network net = chain_network({{4.0, 5.0}, {5.0, 5.0}, {6.0, 5.0}});
    const RateAssignment rates = explicit_rates({4, 1, 1}, 0);
    CHECK(brute_force_min_cut(net, rates, 0, 2) == 1);
    CHECK(min_cut_st(net, rates, 0, 2).value == 1);
}

TEST_CASE("two adjacent nodes cut at the source rate") {
    const Network net = chain_network({{5.0, 5.0}, {5.5, 5.0}});
    const RateAssignment rates = explicit_rates({3, 3}, 0);
    CHECK(brute_force_min_cut(net, rates, 0, 1) == 3);
    CHECK(min_cut_st(net, rates, 0, 1).value == 3);
}

TEST_CASE("brute force refuses large networks") {
    const Network net = generate_random_disk(21, 5.0, 1.0, 1.5, 1);
    const RateAssignment rates = assign_rates(net);
    CHECK_THROWS_AS(brute_force_min_cut(net, rates, 0, 1), std::invalid_argument);
}

TEST_CASE("max-flow reduction equals exhaustive search on small instances") {
    Rng rng(987654321);
    for (int instance = 0; instance < 50; ++instance) {
        const Network net = random_connected_disk(rng, 2, 10);
        const RateAssignment rates = random_rates(rng, net, 1, 5);
        const int s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(net.size())));
        int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(net.size() - 1)));
        if (t >= s) ++t;

        const MinCut cut = min_cut_st(net, rates, s, t);
        CHECK(cut.value == brute_force_min_cut(net, rates, s, t));
        CHECK(cut_capacity(net, rates, cut.witness) == cut.value);
        CHECK(std::find(cut.witness.S.begin(), cut.witness.S.end(), s) != cut.witness.S.end());
        CHECK(std::find(cut.witness.T.begin(), cut.witness.T.end(), t) != cut.witness.T.end());
    }
}

TEST_CASE("reduction matches exhaustive search on twelve node instances") {
    Rng rng(555);
    for (int instance = 0; instance < 6; ++instance) {
        const Network net = random_connected_disk(rng, 12, 12);
        const RateAssignment rates = random_rates(rng, net, 1, 5);
        for (int t = 1; t < net.size(); ++t)
            CHECK(min_cut_st(net, rates, 0, t).value == brute_force_min_cut(net, rates, 0, t));
    }
}

TEST_CASE("terminal validation") {
    const Network net = generate_lattice(6, 1.0, 1.5);
    const RateAssignment rates = assign_rates(net);
    CHECK_THROWS_AS(min_cut_st(net, rates, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_cut_st(net, rates, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_cut_st(net, rates, 0, 99), std::invalid_argument);
    CHECK_THROWS_AS(min_cut_broadcast(net, rates, -2), std::invalid_argument);
    CHECK_THROWS_AS(min_cut_broadcast_sampled(net, rates, 0, 0, 1), std::invalid_argument);
}
