#include "hypercast/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypercast {

CostReport cost_report(const Network& net, const std::vector<Hyperarc>& arcs,
                       const RateAssignment& rates, std::int64_t min_cut) {
    if (min_cut <= 0)
        throw std::invalid_argument("cost_report: min-cut <= 0 (disconnected network)");
    if (rates.rate.size() != arcs.size())
        throw std::invalid_argument("cost_report: rates do not match the network");
    CostReport report;
    report.n = net.size();
    report.min_cut = min_cut;
    report.total_rate = total_rate(rates);
    for (const Hyperarc& arc : arcs)
        report.max_degree =
            std::max(report.max_degree, static_cast<std::int64_t>(arc.targets.size()));
    if (report.max_degree <= 0)
        throw std::invalid_argument("cost_report: network has no links");
    report.cost = static_cast<double>(report.total_rate) / static_cast<double>(min_cut);
    report.floor_cost =
        static_cast<double>(report.n) / static_cast<double>(report.max_degree);
    report.relative_cost = report.cost / report.floor_cost;
    return report;
}

CostReport cost_report(const Network& net, const RateAssignment& rates, std::int64_t min_cut) {
    return cost_report(net, build_hyperarcs(net), rates, min_cut);
}

double shared_neighborhood_area(double rho) {
    return rho * rho * (2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0);
}

double noncoding_relative_cost_bound() {
    return 6.0 * std::numbers::pi / (2.0 * std::numbers::pi + 3.0 * std::sqrt(3.0));
}

double expected_neighbors(double rho, double mu) {
    return std::numbers::pi * rho * rho * mu;
}

OccupancyTailBound min_occupancy_tail_bound(double L, double r, double mu, double delta) {
    if (!(r > 0.0) || !(r < L)) throw std::invalid_argument("tail bound: need 0 < r < L");
    if (!(mu > 0.0)) throw std::invalid_argument("tail bound: mu must be positive");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("tail bound: delta must lie in (0, 1)");
    OccupancyTailBound bound;
    const double cells_log = std::log(L * L / (r * r));
    bound.exponent = cells_log * (1.0 - mu * r * r * delta * delta / (2.0 * cells_log));
    bound.raw = std::exp(bound.exponent);
    bound.value = std::clamp(bound.raw, 0.0, 1.0);
    return bound;
}

}  // namespace hypercast
