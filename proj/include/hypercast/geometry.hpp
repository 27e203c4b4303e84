#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace hypercast {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double squared_distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Integer lattice offset / grid index.
struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// True when p lies in the strip of width W along the edges of [0,L]^2.
// The interior is closed: a point exactly W from every edge is interior.
bool classify_border(const Point& p, double L, double W);

// Areas of the border strip and of the interior square; they sum to L^2.
struct BorderSpec {
    double W = 0.0;
    double border_area = 0.0;
    double interior_area = 0.0;
};

// pre: L > 0, 0 < W < L/2
BorderSpec make_border_spec(double L, double W);

// Integer offsets inside the closed disk {(x,y) : x^2 + y^2 <= radius^2}.
// Contains (0,0) whenever radius >= 0; offsets are sorted.
struct LatticeMask {
    std::vector<Cell> offsets;
    double radius = 0.0;

    std::size_t size() const { return offsets.size(); }
    // Neighbor count of an interior lattice node with this radio range.
    int degree() const { return static_cast<int>(offsets.size()) - 1; }
};

// pre: radius >= 0
LatticeMask lattice_mask(double radius);

// Exact sumset {a + b : a in A, b in B}, sorted, deduplicated.
// pre: both inputs nonempty
std::vector<Cell> minkowski_sum(const std::vector<Cell>& a, const std::vector<Cell>& b);

}  // namespace hypercast
