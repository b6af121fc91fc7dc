#include "parabolica/geometry.hpp"

#include <algorithm>

namespace parabolica {

std::vector<Exp2> convex_hull_2d(std::vector<Exp2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Exp2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Int polygon_area2(const std::vector<Exp2>& poly) {
    Int acc(0);
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Exp2& a = poly[k];
        const Exp2& b = poly[(k + 1) % n];
        acc += Int(a.i) * Int(b.j) - Int(a.j) * Int(b.i);
    }
    return acc;
}

int point_in_polygon(const Exp2& q, const std::vector<Exp2>& poly) {
    const std::size_t n = poly.size();
    bool boundary = false;
    for (std::size_t k = 0; k < n; ++k) {
        Int c = cross2(poly[k], poly[(k + 1) % n], q);
        if (c < 0) return -1;
        if (c == 0) {
            // On the supporting line; inside the segment range?
            const Exp2& a = poly[k];
            const Exp2& b = poly[(k + 1) % n];
            if (std::min(a.i, b.i) <= q.i && q.i <= std::max(a.i, b.i) &&
                std::min(a.j, b.j) <= q.j && q.j <= std::max(a.j, b.j))
                boundary = true;
            else
                return -1;
        }
    }
    return boundary ? 0 : 1;
}

std::vector<Exp2> lattice_points_in(const std::vector<Exp2>& poly) {
    std::vector<Exp2> out;
    if (poly.empty()) return out;
    int lo_i = poly[0].i, hi_i = poly[0].i, lo_j = poly[0].j, hi_j = poly[0].j;
    for (const auto& p : poly) {
        lo_i = std::min(lo_i, p.i);
        hi_i = std::max(hi_i, p.i);
        lo_j = std::min(lo_j, p.j);
        hi_j = std::max(hi_j, p.j);
    }
    for (int i = lo_i; i <= hi_i; ++i)
        for (int j = lo_j; j <= hi_j; ++j)
            if (point_in_polygon({i, j}, poly) >= 0) out.push_back({i, j});
    return out;
}

std::vector<Exp2> canonical_polygon(std::vector<Exp2> corners) {
    if (corners.empty()) return corners;
    if (polygon_area2(corners) < 0) std::reverse(corners.begin(), corners.end());
    std::size_t best = 0;
    for (std::size_t k = 1; k < corners.size(); ++k)
        if (lex_less(corners[k], corners[best])) best = k;
    std::rotate(corners.begin(), corners.begin() + best, corners.end());
    return corners;
}

}  // namespace parabolica
