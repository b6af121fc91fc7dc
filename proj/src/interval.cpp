#include "parabolica/interval.hpp"

#include <cfloat>

namespace parabolica {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Round-to-nearest addition error via Knuth's TwoSum; zero iff exact.
inline double add_err(double a, double b, double s) {
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

inline double lo_add(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s == kInf ? DBL_MAX : -kInf;
    double e = add_err(a, b, s);
    return e < 0.0 ? next_down(s) : s;
}

inline double hi_add(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s == -kInf ? -DBL_MAX : kInf;
    double e = add_err(a, b, s);
    return e > 0.0 ? next_up(s) : s;
}

inline double lo_mul(double a, double b) {
    double p = a * b;
    if (std::isnan(p)) return -kInf;  // 0 * inf
    if (!std::isfinite(p)) return p == kInf ? DBL_MAX : -kInf;
    double e = std::fma(a, b, -p);
    return e < 0.0 ? next_down(p) : p;
}

inline double hi_mul(double a, double b) {
    double p = a * b;
    if (std::isnan(p)) return kInf;
    if (!std::isfinite(p)) return p == -kInf ? -DBL_MAX : kInf;
    double e = std::fma(a, b, -p);
    return e > 0.0 ? next_up(p) : p;
}

}  // namespace

double next_up(double v) {
    if (v == kInf) return v;
    return std::nextafter(v, kInf);
}

double next_down(double v) {
    if (v == -kInf) return v;
    return std::nextafter(v, -kInf);
}

double Interval::mid() const {
    if (lo == hi) return lo;
    double m = 0.5 * (lo + hi);
    if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
    if (m < lo) m = lo;
    if (m > hi) m = hi;
    return m;
}

Interval iadd(const Interval& a, const Interval& b) {
    return {lo_add(a.lo, b.lo), hi_add(a.hi, b.hi)};
}

Interval isub(const Interval& a, const Interval& b) {
    return {lo_add(a.lo, -b.hi), hi_add(a.hi, -b.lo)};
}

Interval ineg(const Interval& a) { return {-a.hi, -a.lo}; }

Interval imul(const Interval& a, const Interval& b) {
    if ((a.lo == 0.0 && a.hi == 0.0) || (b.lo == 0.0 && b.hi == 0.0)) return {0.0, 0.0};
    double lo = std::min(std::min(lo_mul(a.lo, b.lo), lo_mul(a.lo, b.hi)),
                         std::min(lo_mul(a.hi, b.lo), lo_mul(a.hi, b.hi)));
    double hi = std::max(std::max(hi_mul(a.lo, b.lo), hi_mul(a.lo, b.hi)),
                         std::max(hi_mul(a.hi, b.lo), hi_mul(a.hi, b.hi)));
    return {lo, hi};
}

Interval idiv(const Interval& a, const Interval& b) {
    // Caller guarantees 0 not in b; reciprocal then multiply.
    double rlo, rhi;
    if (b.lo > 0.0 || b.hi < 0.0) {
        rlo = next_down(1.0 / b.hi);
        rhi = next_up(1.0 / b.lo);
    } else {
        return {-kInf, kInf};
    }
    return imul(a, {rlo, rhi});
}

Interval ipow(const Interval& a, unsigned e) {
    if (e == 0) return {1.0, 1.0};
    if (e == 1) return a;
    if (e % 2 == 0 && a.lo < 0.0 && a.hi > 0.0) {
        // Even power over a sign-straddling interval: [0, max^e].
        double m = a.mag();
        Interval r{1.0, 1.0};
        Interval base{m, m};
        unsigned k = e;
        Interval acc = base;
        while (k > 0) {
            if (k & 1u) r = imul(r, acc);
            k >>= 1;
            if (k) acc = imul(acc, acc);
        }
        return {0.0, r.hi};
    }
    Interval r{1.0, 1.0};
    Interval acc = a;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) r = imul(r, acc);
        k >>= 1;
        if (k) acc = imul(acc, acc);
    }
    return r;
}

Interval iintersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval ihull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool idisjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool isubset(const Interval& a, const Interval& b) { return b.lo <= a.lo && a.hi <= b.hi; }

bool isubset_strict(const Interval& a, const Interval& b) { return b.lo < a.lo && a.hi < b.hi; }

Interval rat_to_interval(const Rat& q) {
    double d = mpq_get_d(q.get_mpq_t());  // rounds toward zero
    if (!std::isfinite(d)) {
        return d > 0 ? Interval{DBL_MAX, kInf} : Interval{-kInf, -DBL_MAX};
    }
    if (Rat(d) == q) return {d, d};
    if (q > 0) return {d, next_up(d)};
    return {next_down(d), d};
}

Interval rat_interval(const Rat& lo, const Rat& hi) {
    return {rat_to_interval(lo).lo, rat_to_interval(hi).hi};
}

bool rat_interval_disjoint(const RatInterval& a, const RatInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

bool boxq_disjoint(const BoxQ& a, const BoxQ& b) {
    return rat_interval_disjoint(a.x, b.x) || rat_interval_disjoint(a.y, b.y);
}

RatInterval rat_interval_scale(const RatInterval& v, const Rat& c) {
    if (c >= 0) return {v.lo * c, v.hi * c};
    return {v.hi * c, v.lo * c};
}

BoxD boxq_to_boxd(const BoxQ& b) {
    return {rat_interval(b.x.lo, b.x.hi), rat_interval(b.y.lo, b.y.hi)};
}

Rat rat_from_double(double v) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), v);
    return q;
}

BoxQ boxd_to_boxq(const BoxD& b) {
    return {{rat_from_double(b.x.lo), rat_from_double(b.x.hi)},
            {rat_from_double(b.y.lo), rat_from_double(b.y.hi)}};
}

}  // namespace parabolica
