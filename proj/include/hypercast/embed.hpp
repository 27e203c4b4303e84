#pragma once

#include <cstdint>
#include <vector>

#include "hypercast/geometry.hpp"
#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"

namespace hypercast {

// Nearest point of the grid r*Z^2, as a grid index / as a position.
// pre: r > 0
Cell map_to_lattice_index(const Point& p, double r);
Point map_to_lattice(const Point& p, double r);

// Node counts over the r-tiling of [0,L]^2: K = round(L/r) full cells per
// axis, cell (i,j) covering [ir,(i+1)r) x [jr,(j+1)r) with the top edge
// closed. Every node lands in exactly one cell, so counts sum to N.
struct EmbeddedLattice {
    double r = 0.0;
    int cells_per_axis = 0;               // K
    std::vector<std::int64_t> count;      // row-major, K*K entries
    std::int64_t min_occupancy = 0;       // over all K^2 cells
    std::int64_t max_occupancy = 0;
    double mean_occupancy = 0.0;          // N / K^2

    std::int64_t at(int ix, int iy) const {
        return count[static_cast<std::size_t>(ix) * cells_per_axis + iy];
    }
};

// pre: r > 0
EmbeddedLattice occupancy(const Network& net, double r);

// Offsets of the coarse lattice whose step-r points are still mutual radio
// neighbors after each endpoint moves up to r/2 within its cell: radius
// (rho - 2r)/r in grid units.
// pre: 0 < 2r < rho
LatticeMask embedded_mask(double rho, double r);

// Certified lower bound on the broadcast min-cut from any source:
// min_occupancy * (|embedded mask| - 1). Zero when some cell is empty.
// pre: 0 < 2r < rho, r < W - rho, and every border rate >= |mask| - 1
std::int64_t embedded_lattice_bound(const Network& net, const RateAssignment& rates, double r);

}  // namespace hypercast
