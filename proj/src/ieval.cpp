#include "parabolica/ieval.hpp"

namespace parabolica {

IPoly::IPoly(const SparsePoly& p) {
    terms_.reserve(p.terms.size());
    for (const auto& [e, c] : p.terms) {
        terms_.push_back({e.i, e.j, rat_to_interval(c)});
        if (e.i > max_i_) max_i_ = e.i;
        if (e.j > max_j_) max_j_ = e.j;
    }
}

namespace {

thread_local std::vector<Interval> g_xp;
thread_local std::vector<Interval> g_yp;

void fill_powers(std::vector<Interval>& table, const Interval& base, int up_to) {
    table.clear();
    table.push_back({1.0, 1.0});
    for (int k = 1; k <= up_to; ++k) {
        // x^(2m) over a sign-straddling interval tightens to [0, mag^2m];
        // recompute even powers directly instead of chaining products.
        if (k % 2 == 0 && base.lo < 0.0 && base.hi > 0.0)
            table.push_back(ipow(base, static_cast<unsigned>(k)));
        else
            table.push_back(imul(table.back(), base));
    }
}

}  // namespace

Interval IPoly::eval(const Interval& x, const Interval& y) const {
    if (terms_.empty()) return {0.0, 0.0};
    fill_powers(g_xp, x, max_i_);
    fill_powers(g_yp, y, max_j_);
    Interval acc{0.0, 0.0};
    for (const auto& t : terms_) acc = iadd(acc, imul(t.c, imul(g_xp[t.i], g_yp[t.j])));
    return acc;
}

Interval IPoly::eval_point(double x, double y) const { return eval({x, x}, {y, y}); }

IPolyGrad::IPolyGrad(const SparsePoly& p)
    : p_(p), px_(derivative(p, Axis::X)), py_(derivative(p, Axis::Y)) {}

Interval IPolyGrad::eval_tight(const BoxD& b) const {
    Interval plain = p_.eval(b.x, b.y);
    if (b.x.is_point() && b.y.is_point()) return plain;
    double mx = b.x.mid(), my = b.y.mid();
    Interval centered = p_.eval_point(mx, my);
    centered = iadd(centered, imul(px_.eval(b.x, b.y), isub(b.x, {mx, mx})));
    centered = iadd(centered, imul(py_.eval(b.x, b.y), isub(b.y, {my, my})));
    Interval both = iintersect(plain, centered);
    return both.valid() ? both : plain;
}

Interval eval_interval(const SparsePoly& f, const BoxQ& box) {
    return IPoly(f).eval(rat_interval(box.x.lo, box.x.hi), rat_interval(box.y.lo, box.y.hi));
}

}  // namespace parabolica
