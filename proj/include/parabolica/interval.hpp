#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "parabolica/rational.hpp"

namespace parabolica {

// Closed interval with double endpoints. Arithmetic rounds outward: each
// primitive is computed in round-to-nearest and the endpoint is nudged one
// ulp outward whenever the operation was inexact (checked with TwoSum / fma
// residuals), so every result encloses the exact real-arithmetic value.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    double width() const { return hi - lo; }
    double mid() const;
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    bool is_point() const { return lo == hi; }
    bool valid() const { return lo <= hi; }
};

double next_up(double v);
double next_down(double v);

Interval iadd(const Interval& a, const Interval& b);
Interval isub(const Interval& a, const Interval& b);
Interval imul(const Interval& a, const Interval& b);
Interval idiv(const Interval& a, const Interval& b);  // requires 0 not in b
Interval ineg(const Interval& a);
Interval ipow(const Interval& a, unsigned e);

// Intersection; empty result reported via valid() == false.
Interval iintersect(const Interval& a, const Interval& b);
Interval ihull(const Interval& a, const Interval& b);

bool idisjoint(const Interval& a, const Interval& b);
bool isubset(const Interval& a, const Interval& b);         // a subset of b
bool isubset_strict(const Interval& a, const Interval& b);  // a in interior of b

// Smallest double interval containing the exact rational.
Interval rat_to_interval(const Rat& q);
// Conservative double interval for [lo, hi] with rational endpoints.
Interval rat_interval(const Rat& lo, const Rat& hi);

struct BoxD {
    Interval x;
    Interval y;

    double max_width() const { return std::max(x.width(), y.width()); }
    bool contains(const BoxD& o) const { return isubset(o.x, x) && isubset(o.y, y); }
};

inline bool box_disjoint(const BoxD& a, const BoxD& b) {
    return idisjoint(a.x, b.x) || idisjoint(a.y, b.y);
}

// Exact-rational interval and box, used at API boundaries and wherever the
// double path would be unsound (mapping enclosures through coordinate
// scalings, reporting).
struct RatInterval {
    Rat lo;
    Rat hi;

    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

struct BoxQ {
    RatInterval x;
    RatInterval y;
};

bool rat_interval_disjoint(const RatInterval& a, const RatInterval& b);
bool boxq_disjoint(const BoxQ& a, const BoxQ& b);

// Exact image of [lo, hi] under multiplication by c (handles c < 0).
RatInterval rat_interval_scale(const RatInterval& v, const Rat& c);

// Outer double box for a rational box; inner conversion back is exact
// because double endpoints are dyadic.
BoxD boxq_to_boxd(const BoxQ& b);
BoxQ boxd_to_boxq(const BoxD& b);
Rat rat_from_double(double v);

}  // namespace parabolica
