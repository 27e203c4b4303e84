#include "hypercast/embed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypercast {

Cell map_to_lattice_index(const Point& p, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("map_to_lattice_index: r must be positive");
    return {static_cast<int>(std::floor(p.x / r + 0.5)),
            static_cast<int>(std::floor(p.y / r + 0.5))};
}

Point map_to_lattice(const Point& p, double r) {
    const Cell c = map_to_lattice_index(p, r);
    return {r * c.x, r * c.y};
}

EmbeddedLattice occupancy(const Network& net, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("occupancy: r must be positive");
    EmbeddedLattice grid;
    grid.r = r;
    const int k = std::max(1, static_cast<int>(std::llround(net.L / r)));
    grid.cells_per_axis = k;
    grid.count.assign(static_cast<std::size_t>(k) * k, 0);
    for (const Point& p : net.nodes) {
        const int ix = std::clamp(static_cast<int>(std::floor(p.x / r)), 0, k - 1);
        const int iy = std::clamp(static_cast<int>(std::floor(p.y / r)), 0, k - 1);
        ++grid.count[static_cast<std::size_t>(ix) * k + iy];
    }
    const auto [lo, hi] = std::minmax_element(grid.count.begin(), grid.count.end());
    grid.min_occupancy = *lo;
    grid.max_occupancy = *hi;
    grid.mean_occupancy = static_cast<double>(net.size()) / (static_cast<double>(k) * k);
    return grid;
}

LatticeMask embedded_mask(double rho, double r) {
    if (!(r > 0.0) || !(2.0 * r < rho))
        throw std::invalid_argument("embedded_mask: need 0 < 2r < rho");
    // rho/r - 2, not (rho - 2r)/r: the fused form loses exactness for clean
    // ratios like 2.0/0.4 and drops boundary cells from the mask
    return lattice_mask(rho / r - 2.0);
}

std::int64_t embedded_lattice_bound(const Network& net, const RateAssignment& rates, double r) {
    if (!(r > 0.0) || !(2.0 * r < net.rho))
        throw std::invalid_argument("embedded_lattice_bound: need 0 < 2r < rho");
    if (!(r < net.W - net.rho))
        throw std::invalid_argument("embedded_lattice_bound: need r < W - rho");
    if (rates.rate.size() != static_cast<std::size_t>(net.size()))
        throw std::invalid_argument("embedded_lattice_bound: rates do not match the network");

    const LatticeMask mask = embedded_mask(net.rho, r);
    const std::int64_t needed = mask.degree();
    // The certificate charges every border-cell crossing at the coarse
    // degree, so border nodes must actually send that fast.
    for (int v = 0; v < net.size(); ++v) {
        if (rates.rate[static_cast<std::size_t>(v)] < 1)
            throw std::invalid_argument("embedded_lattice_bound: rates must be >= 1");
        if (net.is_border(v) && rates.rate[static_cast<std::size_t>(v)] < needed)
            throw std::invalid_argument(
                "embedded_lattice_bound: border rates below the embedded degree");
    }
    return occupancy(net, r).min_occupancy * needed;
}

}  // namespace hypercast
