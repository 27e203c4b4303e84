#pragma once

#include <cstdint>

#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"

namespace hypercast {

// Broadcast cost figures for one network + rate assignment.
//   cost          total rate per unit of min-cut (transmissions per packet)
//   floor_cost    N / max degree: no scheme can beat this
//   relative_cost cost / floor_cost, >= 1
struct CostReport {
    int n = 0;
    std::int64_t total_rate = 0;
    std::int64_t min_cut = 0;
    std::int64_t max_degree = 0;
    double cost = 0.0;
    double floor_cost = 0.0;
    double relative_cost = 0.0;
};

// errors: rejects min_cut <= 0 ("disconnected")
CostReport cost_report(const Network& net, const std::vector<Hyperarc>& arcs,
                       const RateAssignment& rates, std::int64_t min_cut);
CostReport cost_report(const Network& net, const RateAssignment& rates, std::int64_t min_cut);

// Area of the lens shared by two unit-spaced radio disks, rho^2 * (2pi/3 - sqrt(3)/2).
double shared_neighborhood_area(double rho);

// Lower bound on the relative cost of any plain store-and-forward broadcast:
// 6pi / (2pi + 3*sqrt(3)), about 1.642.
double noncoding_relative_cost_bound();

// Expected neighbor count of a node at density mu: pi * rho^2 * mu.
double expected_neighbors(double rho, double mu);

struct OccupancyTailBound {
    double exponent = 0.0;  // log of the raw bound
    double raw = 0.0;
    double value = 0.0;     // raw clamped to [0, 1]
};

// Tail bound on the chance that some cell of the r-tiling of [0,L]^2 holds
// at most (1-delta) * mu * r^2 nodes:
//   exp( log(L^2/r^2) * (1 - mu r^2 delta^2 / (2 log(L^2/r^2))) )
// pre: 0 < r < L, mu > 0, 0 < delta < 1
OccupancyTailBound min_occupancy_tail_bound(double L, double r, double mu, double delta);

}  // namespace hypercast
