#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"

using namespace hypercast;

namespace {

// quadratic reference for the bucketed neighbor search
std::vector<Hyperarc> hyperarcs_by_scan(const Network& net) {
    std::vector<Hyperarc> arcs(static_cast<std::size_t>(net.size()));
    for (int v = 0; v < net.size(); ++v) {
        arcs[static_cast<std::size_t>(v)].head = v;
        for (int u = 0; u < net.size(); ++u)
            if (u != v && squared_distance(net.nodes[static_cast<std::size_t>(v)],
                                           net.nodes[static_cast<std::size_t>(u)]) <=
                              net.rho * net.rho)
                arcs[static_cast<std::size_t>(v)].targets.push_back(u);
    }
    return arcs;
}

int id_of(int x, int y, int L) { return x * L + y; }

}  // namespace

TEST_CASE("lattice layout and source placement") {
    const Network net = generate_lattice(3, 1.0, 1.2);
    REQUIRE(net.size() == 9);
    std::set<std::pair<double, double>> positions;
    for (const Point& p : net.nodes) positions.insert({p.x, p.y});
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(positions.count({x, y}) == 1);

    const Network big = generate_lattice(10, 1.0, 2.0);
    REQUIRE(big.size() == 100);
    CHECK(big.source_id == id_of(5, 5, 10));  // node exactly at the center
    CHECK(big.nodes[static_cast<std::size_t>(big.source_id)].x == 5.0);
}

TEST_CASE("lattice generation rejects bad geometry") {
    CHECK_THROWS_WITH_AS(generate_lattice(10, 1.0, 0.5), doctest::Contains("W must exceed rho"),
                         std::invalid_argument);
    CHECK_THROWS_AS(generate_lattice(10, 1.0, 5.0), std::invalid_argument);   // L == 2W
    CHECK_THROWS_AS(generate_lattice(4, 1.0, 2.5), std::invalid_argument);    // L < 2W
    CHECK_THROWS_AS(generate_lattice(1, 0.5, 0.6), std::invalid_argument);    // too small
}

TEST_CASE("disk generation is reproducible and validated") {
    const Network a = generate_random_disk(100, 10.0, 1.0, 2.0, 42);
    const Network b = generate_random_disk(100, 10.0, 1.0, 2.0, 42);
    REQUIRE(a.size() == 100);
    for (int v = 0; v < a.size(); ++v) {
        CHECK(a.nodes[static_cast<std::size_t>(v)].x == b.nodes[static_cast<std::size_t>(v)].x);
        CHECK(a.nodes[static_cast<std::size_t>(v)].y == b.nodes[static_cast<std::size_t>(v)].y);
        CHECK(a.nodes[static_cast<std::size_t>(v)].x >= 0.0);
        CHECK(a.nodes[static_cast<std::size_t>(v)].x < 10.0);
    }
    CHECK(a.source_id == b.source_id);

    const Network c = generate_random_disk(100, 10.0, 1.0, 2.0, 43);
    bool any_difference = false;
    for (int v = 0; v < c.size(); ++v)
        any_difference |=
            c.nodes[static_cast<std::size_t>(v)].x != a.nodes[static_cast<std::size_t>(v)].x;
    CHECK(any_difference);

    CHECK_THROWS_WITH_AS(generate_random_disk(100, 10.0, 1.0, 1.0, 1),
                         doctest::Contains("W must exceed rho"), std::invalid_argument);
    CHECK_THROWS_AS(generate_random_disk(1, 10.0, 1.0, 2.0, 1), std::invalid_argument);
}

TEST_CASE("hyperarcs match the radio range") {
    const Network net = generate_lattice(3, 1.0, 1.2);
    const auto arcs = build_hyperarcs(net);
    const std::vector<int> corner{id_of(0, 1, 3), id_of(1, 0, 3)};
    CHECK(arcs[static_cast<std::size_t>(id_of(0, 0, 3))].targets == corner);

    const Network big = generate_lattice(10, 1.0, 2.0);
    const auto big_arcs = build_hyperarcs(big);
    CHECK(big_arcs[static_cast<std::size_t>(id_of(5, 5, 10))].targets.size() == 4);

    const Network wide = generate_lattice(10, 2.0, 3.0);
    const auto wide_arcs = build_hyperarcs(wide);
    CHECK(wide_arcs[static_cast<std::size_t>(id_of(5, 5, 10))].targets.size() == 12);
}

TEST_CASE("bucketed neighbor search equals the quadratic scan") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        const Network net = generate_random_disk(120, 6.0, 1.3, 1.5, seed);
        const auto fast = build_hyperarcs(net);
        const auto slow = hyperarcs_by_scan(net);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t v = 0; v < fast.size(); ++v) CHECK(fast[v].targets == slow[v].targets);
    }
}

TEST_CASE("adjacency is symmetric") {
    const Network net = generate_random_disk(200, 10.0, 1.0, 2.0, 5);
    const auto arcs = build_hyperarcs(net);
    for (int v = 0; v < net.size(); ++v)
        for (int u : arcs[static_cast<std::size_t>(v)].targets)
            CHECK(std::binary_search(arcs[static_cast<std::size_t>(u)].targets.begin(),
                                     arcs[static_cast<std::size_t>(u)].targets.end(), v));
}

TEST_CASE("connectivity: lattices connect, far pairs do not") {
    CHECK(is_connected(generate_lattice(6, 1.0, 1.5)));

    // hunt for a 2-node instance with the nodes out of range
    bool found = false;
    for (std::uint64_t seed = 1; seed < 200 && !found; ++seed) {
        const Network net = generate_random_disk(2, 10.0, 1.0, 2.0, seed);
        if (squared_distance(net.nodes[0], net.nodes[1]) > 1.0) {
            CHECK_FALSE(is_connected(net));
            CHECK(build_hyperarcs(net)[0].targets.empty());
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("union-find agrees with the traversal on connectivity") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Network net = generate_random_disk(60, 12.0, 1.1, 1.3, seed);

        std::vector<int> parent(static_cast<std::size_t>(net.size()));
        for (int v = 0; v < net.size(); ++v) parent[static_cast<std::size_t>(v)] = v;
        auto root = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        for (int v = 0; v < net.size(); ++v)
            for (int u = v + 1; u < net.size(); ++u)
                if (squared_distance(net.nodes[static_cast<std::size_t>(v)],
                                     net.nodes[static_cast<std::size_t>(u)]) <=
                    net.rho * net.rho)
                    parent[static_cast<std::size_t>(root(u))] = root(v);
        bool one_component = true;
        for (int v = 1; v < net.size(); ++v) one_component &= root(v) == root(0);

        CHECK(is_connected(net) == one_component);
    }
}

TEST_CASE("lattice border membership uses the cell frame") {
    const Network net = generate_lattice(10, 1.0, 2.0);
    int border_count = 0;
    for (int v = 0; v < net.size(); ++v) border_count += net.is_border(v);
    CHECK(border_count == 64);  // interior is the 6x6 block {2..7}^2
    CHECK_FALSE(net.is_border(id_of(2, 2, 10)));
    CHECK(net.is_border(id_of(1, 5, 10)));
    CHECK(net.is_border(id_of(8, 5, 10)));

    const Network disk = generate_random_disk(50, 10.0, 1.0, 2.0, 3);
    for (int v = 0; v < disk.size(); ++v)
        CHECK(disk.is_border(v) ==
              classify_border(disk.nodes[static_cast<std::size_t>(v)], disk.L, disk.W));
}

TEST_CASE("network JSON round trip") {
    const Network net = generate_random_disk(40, 8.0, 1.0, 1.5, 11);
    const RateAssignment rates = assign_rates(net);
    const std::string text = network_to_json(net, &rates);
    const LoadedNetwork loaded = network_from_json(text);

    CHECK(loaded.net.kind == NetKind::disk);
    CHECK(loaded.net.L == net.L);
    CHECK(loaded.net.rho == net.rho);
    CHECK(loaded.net.W == net.W);
    CHECK(loaded.net.source_id == net.source_id);
    REQUIRE(loaded.net.size() == net.size());
    for (int v = 0; v < net.size(); ++v) {
        // serialization must preserve doubles exactly
        CHECK(loaded.net.nodes[static_cast<std::size_t>(v)].x ==
              net.nodes[static_cast<std::size_t>(v)].x);
        CHECK(loaded.net.nodes[static_cast<std::size_t>(v)].y ==
              net.nodes[static_cast<std::size_t>(v)].y);
    }
    REQUIRE(loaded.has_rates);
    CHECK(loaded.rates == rates.rate);
    CHECK(loaded.boosted_rate == rates.boosted_rate);
}

TEST_CASE("network JSON rejects malformed documents") {
    CHECK_THROWS_AS(network_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(network_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(R"({"version":2,"kind":"disk","L":10,"rho":1,"W":2,)"
                                      R"("sourceId":0,"nodes":[[0,0],[1,1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(R"({"version":1,"kind":"disk","L":10,"rho":1,"W":2,)"
                                      R"("sourceId":5,"nodes":[[0,0],[1,1]]})"),
                    std::invalid_argument);  // source out of range
    CHECK_THROWS_AS(network_from_json(R"({"version":1,"kind":"disk","L":10,"rho":1,"W":2,)"
                                      R"("sourceId":0,"nodes":[[0,0],[11,1]]})"),
                    std::invalid_argument);  // node outside the square
    CHECK_THROWS_AS(network_from_json(R"({"version":1,"kind":"disk","L":10,"rho":1,"W":0.5,)"
                                      R"("sourceId":0,"nodes":[[0,0],[1,1]]})"),
                    std::invalid_argument);  // W <= rho
}
