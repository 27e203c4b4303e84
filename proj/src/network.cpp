#include "hypercast/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "hypercast/rates.hpp"
#include "hypercast/rng.hpp"

namespace hypercast {

namespace {

int nearest_to_center(const std::vector<Point>& nodes, double L) {
    const Point center{L / 2.0, L / 2.0};
    int best = 0;
    double best_d2 = squared_distance(nodes[0], center);
    for (int v = 1; v < static_cast<int>(nodes.size()); ++v) {
        const double d2 = squared_distance(nodes[v], center);
        if (d2 < best_d2) {
            best = v;
            best_d2 = d2;
        }
    }
    return best;
}

}  // namespace

bool Network::is_border(int v) const {
    const Point& p = nodes.at(static_cast<std::size_t>(v));
    if (kind == NetKind::lattice) return classify_border({p.x + 0.5, p.y + 0.5}, L, W);
    return classify_border(p, L, W);
}

Network generate_lattice(int L, double rho, double W) {
    if (L < 2) throw std::invalid_argument("generate_lattice: L must be >= 2");
    if (!(rho > 0.0)) throw std::invalid_argument("generate_lattice: rho must be positive");
    if (!(W > rho)) throw std::invalid_argument("generate_lattice: W must exceed rho");
    if (!(L > 2.0 * W))
        throw std::invalid_argument("generate_lattice: L must exceed 2W (empty interior)");

    Network net;
    net.kind = NetKind::lattice;
    net.L = L;
    net.rho = rho;
    net.W = W;
    net.nodes.reserve(static_cast<std::size_t>(L) * L);
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < L; ++y)
            net.nodes.push_back({static_cast<double>(x), static_cast<double>(y)});
    net.source_id = nearest_to_center(net.nodes, net.L);
    return net;
}

Network generate_random_disk(int N, double L, double rho, double W, std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("generate_random_disk: N must be >= 2");
    if (!(L > 0.0)) throw std::invalid_argument("generate_random_disk: L must be positive");
    if (!(rho > 0.0)) throw std::invalid_argument("generate_random_disk: rho must be positive");
    if (!(W > rho)) throw std::invalid_argument("generate_random_disk: W must exceed rho");

    Network net;
    net.kind = NetKind::disk;
    net.L = L;
    net.rho = rho;
    net.W = W;
    net.nodes.reserve(static_cast<std::size_t>(N));
    Rng rng(seed);
    for (int i = 0; i < N; ++i) {
        const double x = rng.next_in(0.0, L);
        const double y = rng.next_in(0.0, L);
        net.nodes.push_back({x, y});
    }
    net.source_id = nearest_to_center(net.nodes, net.L);
    return net;
}

std::vector<Hyperarc> build_hyperarcs(const Network& net) {
    const int n = net.size();
    if (n == 0) throw std::invalid_argument("build_hyperarcs: empty network");
    if (!(net.rho > 0.0)) throw std::invalid_argument("build_hyperarcs: rho must be positive");

    // Bucket nodes into rho-sized cells; all neighbors of a node lie in the
    // 3x3 block around its cell.
    const int cells = std::max(1, static_cast<int>(std::ceil(net.L / net.rho)));
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(cells) * cells);
    auto cell_of = [&](const Point& p) {
        int cx = static_cast<int>(p.x / net.rho);
        int cy = static_cast<int>(p.y / net.rho);
        cx = std::clamp(cx, 0, cells - 1);
        cy = std::clamp(cy, 0, cells - 1);
        return std::pair{cx, cy};
    };
    for (int v = 0; v < n; ++v) {
        const auto [cx, cy] = cell_of(net.nodes[static_cast<std::size_t>(v)]);
        bucket[static_cast<std::size_t>(cx) * cells + cy].push_back(v);
    }

    const double reach2 = net.rho * net.rho;
    std::vector<Hyperarc> arcs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Hyperarc& arc = arcs[static_cast<std::size_t>(v)];
        arc.head = v;
        const Point& p = net.nodes[static_cast<std::size_t>(v)];
        const auto [cx, cy] = cell_of(p);
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const int bx = cx + dx;
                const int by = cy + dy;
                if (bx < 0 || bx >= cells || by < 0 || by >= cells) continue;
                for (int u : bucket[static_cast<std::size_t>(bx) * cells + by]) {
                    if (u == v) continue;
                    if (squared_distance(p, net.nodes[static_cast<std::size_t>(u)]) <= reach2)
                        arc.targets.push_back(u);
                }
            }
        }
        std::sort(arc.targets.begin(), arc.targets.end());
    }
    return arcs;
}

bool is_connected(const Network& net) {
    const int n = net.size();
    if (n <= 1) return true;
    const auto arcs = build_hyperarcs(net);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int u : arcs[static_cast<std::size_t>(v)].targets) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == n;
}

std::string network_to_json(const Network& net, const RateAssignment* rates) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["kind"] = net.kind == NetKind::lattice ? "lattice" : "disk";
    doc["L"] = net.L;
    doc["rho"] = net.rho;
    doc["W"] = net.W;
    doc["sourceId"] = net.source_id;
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (const Point& p : net.nodes) nodes.push_back({p.x, p.y});
    if (rates != nullptr) {
        doc["rates"] = rates->rate;
        doc["M"] = rates->boosted_rate;
    }
    return doc.dump(2) + "\n";
}

LoadedNetwork network_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("network JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("network JSON: document must be an object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1)
        throw std::invalid_argument("network JSON: unsupported or missing version");
    for (const char* key : {"kind", "L", "rho", "W", "sourceId", "nodes"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("network JSON: missing key '") + key + "'");

    LoadedNetwork loaded;
    Network& net = loaded.net;
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "lattice")
        net.kind = NetKind::lattice;
    else if (kind == "disk")
        net.kind = NetKind::disk;
    else
        throw std::invalid_argument("network JSON: kind must be 'lattice' or 'disk'");
    net.L = doc["L"].get<double>();
    net.rho = doc["rho"].get<double>();
    net.W = doc["W"].get<double>();
    net.source_id = doc["sourceId"].get<int>();
    if (!(net.L > 0.0)) throw std::invalid_argument("network JSON: L must be positive");
    if (!(net.rho > 0.0)) throw std::invalid_argument("network JSON: rho must be positive");
    if (!(net.W > net.rho)) throw std::invalid_argument("network JSON: W must exceed rho");

    const auto& nodes = doc["nodes"];
    if (!nodes.is_array() || nodes.size() < 2)
        throw std::invalid_argument("network JSON: nodes must be an array of at least 2 points");
    net.nodes.reserve(nodes.size());
    for (const auto& item : nodes) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("network JSON: each node must be an [x, y] pair");
        const double x = item[0].get<double>();
        const double y = item[1].get<double>();
        if (!(x >= 0.0 && x <= net.L && y >= 0.0 && y <= net.L))
            throw std::invalid_argument("network JSON: node outside the [0,L]^2 square");
        net.nodes.push_back({x, y});
    }
    if (net.source_id < 0 || net.source_id >= net.size())
        throw std::invalid_argument("network JSON: sourceId out of range");

    if (doc.contains("rates")) {
        const auto& rates = doc["rates"];
        if (!rates.is_array() || rates.size() != net.nodes.size())
            throw std::invalid_argument("network JSON: rates must list one rate per node");
        loaded.rates.reserve(rates.size());
        for (const auto& r : rates) {
            const auto value = r.get<std::int64_t>();
            if (value < 1) throw std::invalid_argument("network JSON: rates must be >= 1");
            loaded.rates.push_back(value);
        }
        loaded.has_rates = true;
        loaded.boosted_rate =
            doc.contains("M") ? doc["M"].get<std::int64_t>()
                              : *std::max_element(loaded.rates.begin(), loaded.rates.end());
        if (loaded.boosted_rate < 1)
            throw std::invalid_argument("network JSON: M must be >= 1");
    }
    return loaded;
}

}  // namespace hypercast
