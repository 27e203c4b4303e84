#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercast/geometry.hpp"

namespace hypercast {

enum class NetKind { lattice, disk };

// One hyperarc per node: transmitting from `head` reaches every node in
// `targets` (all nodes within radio range rho, head excluded), sorted by id.
struct Hyperarc {
    int head = 0;
    std::vector<int> targets;
};

// Node set in the [0,L]^2 square with broadcast reach rho and border width W.
struct Network {
    NetKind kind = NetKind::disk;
    double L = 0.0;
    double rho = 0.0;
    double W = 0.0;
    int source_id = 0;
    std::vector<Point> nodes;

    int size() const { return static_cast<int>(nodes.size()); }

    // Border test in the frame matching the kind. Lattice nodes are the
    // centers of unit cells tiling the square, so their border membership is
    // measured from cell centers; disk nodes use their position directly.
    bool is_border(int v) const;
};

// Integer grid {0..L-1}^2, node id x*L + y, source = node nearest (L/2, L/2)
// (ties to the lowest id).
// pre: L >= 2, rho > 0, W > rho, L > 2W
Network generate_lattice(int L, double rho, double W);

// N points uniform in [0,L)^2 from the given seed, x before y per node.
// pre: N >= 2, L > 0, rho > 0, W > rho
Network generate_random_disk(int N, double L, double rho, double W, std::uint64_t seed);

// pre: net has at least one node and rho > 0
std::vector<Hyperarc> build_hyperarcs(const Network& net);

bool is_connected(const Network& net);

struct RateAssignment;  // rates.hpp

// Document layout: {version, kind, L, rho, W, sourceId, nodes:[[x,y],...]}
// plus optional {rates:[...], M} when a rate assignment is embedded.
std::string network_to_json(const Network& net, const RateAssignment* rates = nullptr);

struct LoadedNetwork {
    Network net;
    bool has_rates = false;
    std::vector<std::int64_t> rates;
    std::int64_t boosted_rate = 0;
};

// Parses and validates a document produced by network_to_json.
LoadedNetwork network_from_json(const std::string& text);

}  // namespace hypercast
