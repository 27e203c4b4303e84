#include "hypercast/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypercast {

bool classify_border(const Point& p, double L, double W) {
    const double edge_distance = std::min({p.x, p.y, L - p.x, L - p.y});
    return edge_distance < W;
}

BorderSpec make_border_spec(double L, double W) {
    if (!(L > 0.0)) throw std::invalid_argument("make_border_spec: L must be positive");
    if (!(W > 0.0) || !(W < L / 2.0))
        throw std::invalid_argument("make_border_spec: W must lie in (0, L/2)");
    BorderSpec spec;
    spec.W = W;
    spec.border_area = 4.0 * W * (L - W);
    spec.interior_area = (L - 2.0 * W) * (L - 2.0 * W);
    return spec;
}

LatticeMask lattice_mask(double radius) {
    if (!(radius >= 0.0)) throw std::invalid_argument("lattice_mask: radius must be >= 0");
    LatticeMask mask;
    mask.radius = radius;
    const int reach = static_cast<int>(std::floor(radius));
    const double r2 = radius * radius;
    for (int x = -reach; x <= reach; ++x)
        for (int y = -reach; y <= reach; ++y)
            if (static_cast<double>(x) * x + static_cast<double>(y) * y <= r2)
                mask.offsets.push_back({x, y});
    std::sort(mask.offsets.begin(), mask.offsets.end());
    return mask;
}

std::vector<Cell> minkowski_sum(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("minkowski_sum: inputs must be nonempty");
    std::vector<Cell> sum;
    sum.reserve(a.size() * b.size());
    for (const Cell& p : a)
        for (const Cell& q : b) sum.push_back({p.x + q.x, p.y + q.y});
    std::sort(sum.begin(), sum.end());
    sum.erase(std::unique(sum.begin(), sum.end()), sum.end());
    return sum;
}

}  // namespace hypercast
