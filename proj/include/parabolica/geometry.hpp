#pragma once

#include <vector>

#include "parabolica/sparse_poly.hpp"

namespace parabolica {

// Exact lattice-plane primitives shared by the hull construction and the
// tile bookkeeping.

inline Int cross2(const Exp2& o, const Exp2& a, const Exp2& b) {
    return Int(a.i - o.i) * Int(b.j - o.j) - Int(a.j - o.j) * Int(b.i - o.i);
}

// Strict convex hull, CCW, collinear points dropped; input needs no order.
std::vector<Exp2> convex_hull_2d(std::vector<Exp2> pts);

// Twice the signed area of a CCW polygon.
Int polygon_area2(const std::vector<Exp2>& poly);

// 1 inside, 0 on the boundary, -1 outside; poly CCW.
int point_in_polygon(const Exp2& q, const std::vector<Exp2>& poly);

std::vector<Exp2> lattice_points_in(const std::vector<Exp2>& poly);

// Canonical corner order: CCW starting from the lexicographic minimum.
std::vector<Exp2> canonical_polygon(std::vector<Exp2> corners);

inline bool lex_less(const Exp2& a, const Exp2& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace parabolica
