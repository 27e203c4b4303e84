#include "hypercast/rates.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hypercast {

std::int64_t boosted_rate_for(const Network& net) {
    std::int64_t m = 0;
    if (net.kind == NetKind::lattice) {
        m = lattice_mask(net.rho).degree();
    } else {
        const double density = static_cast<double>(net.size()) / (net.L * net.L);
        m = std::llround(std::numbers::pi * net.rho * net.rho * density);
    }
    if (m < 1) throw std::invalid_argument("boosted_rate_for: M must be >= 1 (network too sparse)");
    return m;
}

RateAssignment assign_rates(const Network& net) {
    RateAssignment out;
    out.boosted_rate = boosted_rate_for(net);
    out.source_id = net.source_id;
    out.rate.assign(static_cast<std::size_t>(net.size()), 1);
    for (int v = 0; v < net.size(); ++v)
        if (v == net.source_id || net.is_border(v))
            out.rate[static_cast<std::size_t>(v)] = out.boosted_rate;
    return out;
}

std::int64_t total_rate(const RateAssignment& rates) {
    return std::accumulate(rates.rate.begin(), rates.rate.end(), std::int64_t{0});
}

}  // namespace hypercast
