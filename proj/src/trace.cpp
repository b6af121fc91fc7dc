#include <array>
#include <map>

#include "parabolica/solver.hpp"

namespace parabolica {

namespace {

// Plain double evaluator; tracing is presentation-only and never feeds a
// certificate.
struct DenseEval {
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms;

    explicit DenseEval(const SparsePoly& p) {
        for (const auto& [e, c] : p.terms) terms.push_back({e.i, e.j, mpq_get_d(c.get_mpq_t())});
    }

    double operator()(double x, double y) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double v = t.c;
            for (int k = 0; k < t.i; ++k) v *= x;
            for (int k = 0; k < t.j; ++k) v *= y;
            acc += v;
        }
        return acc;
    }
};

// Edge of the node grid, identified by its lower/left node and orientation.
struct EdgeId {
    int i, j;
    bool horizontal;
    friend bool operator<(const EdgeId& a, const EdgeId& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.horizontal < b.horizontal;
    }
    friend bool operator==(const EdgeId& a, const EdgeId& b) {
        return a.i == b.i && a.j == b.j && a.horizontal == b.horizontal;
    }
};

}  // namespace

std::vector<Polyline> trace_curve(const SparsePoly& p, const BoxQ& window, int resolution) {
    if (resolution < 2) throw std::invalid_argument("trace_curve: resolution must be >= 2");
    DenseEval f(p);
    const int n = resolution;
    double x0 = mpq_get_d(window.x.lo.get_mpq_t()), x1 = mpq_get_d(window.x.hi.get_mpq_t());
    double y0 = mpq_get_d(window.y.lo.get_mpq_t()), y1 = mpq_get_d(window.y.hi.get_mpq_t());
    double dx = (x1 - x0) / n, dy = (y1 - y0) / n;

    std::vector<double> val(static_cast<std::size_t>(n + 1) * (n + 1));
    auto v = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(i) * (n + 1) + j]; };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) v(i, j) = f(x0 + i * dx, y0 + j * dy);

    // Node is "inside" when strictly negative; a crossing sits on each edge
    // whose endpoints disagree, at the linear interpolation of the values.
    auto inside = [&](int i, int j) { return v(i, j) < 0.0; };
    auto crossing = [&](const EdgeId& e) -> std::pair<double, double> {
        double a = v(e.i, e.j);
        double b = e.horizontal ? v(e.i + 1, e.j) : v(e.i, e.j + 1);
        double t = a / (a - b);
        double px = x0 + e.i * dx, py = y0 + e.j * dy;
        if (e.horizontal) return {px + t * dx, py};
        return {px, py + t * dy};
    };

    // Per cell, connect crossing edges with the standard 16-case table;
    // ambiguous saddles take the fixed (bottom-left, top-right) pairing.
    std::map<EdgeId, std::vector<std::pair<EdgeId, int>>> adjacency;
    std::vector<std::array<EdgeId, 2>> segments;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int code = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                       (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            EdgeId bottom{i, j, true}, top{i, j + 1, true};
            EdgeId left{i, j, false}, right{i + 1, j, false};
            auto emit = [&](EdgeId a, EdgeId b) {
                int idx = static_cast<int>(segments.size());
                segments.push_back({a, b});
                adjacency[a].push_back({b, idx});
                adjacency[b].push_back({a, idx});
            };
            switch (code) {
                case 1: case 14: emit(left, bottom); break;
                case 2: case 13: emit(bottom, right); break;
                case 3: case 12: emit(left, right); break;
                case 4: case 11: emit(right, top); break;
                case 6: case 9: emit(bottom, top); break;
                case 7: case 8: emit(left, top); break;
                case 5: emit(left, bottom); emit(right, top); break;
                case 10: emit(bottom, right); emit(left, top); break;
            }
        }
    }

    // Stitch segments into polylines, open chains first.
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;
    auto walk = [&](EdgeId start, int seg_idx) {
        Polyline line;
        line.push_back(crossing(start));
        EdgeId cur = start;
        int seg = seg_idx;
        for (;;) {
            used[seg] = true;
            const auto& s = segments[seg];
            EdgeId next = (s[0] == cur) ? s[1] : s[0];
            line.push_back(crossing(next));
            cur = next;
            int follow = -1;
            for (const auto& [other, idx] : adjacency[cur])
                if (!used[idx]) {
                    follow = idx;
                    break;
                }
            if (follow < 0) break;
            seg = follow;
        }
        out.push_back(std::move(line));
    };

    for (const auto& [edge, links] : adjacency) {
        if (links.size() != 1) continue;  // chain endpoints have degree one
        if (used[links[0].second]) continue;
        walk(edge, links[0].second);
    }
    // Remaining segments form closed loops.
    for (std::size_t k = 0; k < segments.size(); ++k)
        if (!used[k]) walk(segments[k][0], static_cast<int>(k));

    return out;
}

}  // namespace parabolica
