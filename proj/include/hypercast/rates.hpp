#pragma once

#include <cstdint>
#include <vector>

#include "hypercast/network.hpp"

namespace hypercast {

// Per-node transmission rates. The source and every border node send at the
// boosted rate M (the interior neighbor count); everyone else sends at 1.
struct RateAssignment {
    std::vector<std::int64_t> rate;
    std::int64_t boosted_rate = 0;  // M
    int source_id = 0;
};

// M for the network: the interior-node neighbor count for lattices
// (|mask| - 1), round(pi * rho^2 * N / L^2) for random disks.
// errors: rejects networks whose M would fall below 1
std::int64_t boosted_rate_for(const Network& net);

RateAssignment assign_rates(const Network& net);

std::int64_t total_rate(const RateAssignment& rates);

}  // namespace hypercast
