#pragma once

#include <string>

#include "parabolica/sparse_poly.hpp"

namespace parabolica {

// The derived system attached to a surface graph z = f(x, y):
//   h  = f_xx f_yy - f_xy^2
//   (e1, e2)^T = Hess(f) * (-h_y, h_x)^T
//   c  = (-h_y, h_x) Hess(f) (-h_y, h_x)^T = -h_y e1 + h_x e2
// Everything is exact; the same construction applies verbatim over the
// parameter ring, so the template covers both SparsePoly and ParamPoly.
template <typename P>
struct ParabolicSystemT {
    P f;
    P fxx, fxy, fyy;
    P h;
    P hx, hy;
    P e1, e2;
    P c;
};

using ParabolicSystem = ParabolicSystemT<SparsePoly>;
using ParamParabolicSystem = ParabolicSystemT<ParamPoly>;

template <typename P>
ParabolicSystemT<P> build_system(const P& f) {
    ParabolicSystemT<P> s;
    s.f = f;
    P fx = derivative(f, Axis::X);
    P fy = derivative(f, Axis::Y);
    s.fxx = derivative(fx, Axis::X);
    s.fxy = derivative(fx, Axis::Y);
    s.fyy = derivative(fy, Axis::Y);
    s.h = s.fxx * s.fyy - s.fxy * s.fxy;
    s.hx = derivative(s.h, Axis::X);
    s.hy = derivative(s.h, Axis::Y);
    s.e1 = s.fxx * (-s.hy) + s.fxy * s.hx;
    s.e2 = s.fxy * (-s.hy) + s.fyy * s.hx;
    s.c = (-s.hy) * s.e1 + s.hx * s.e2;
    return s;
}

enum class PointClass {
    Elliptic,
    Hyperbolic,
    ParabolicGenericCandidate,
    ParabolicSpecialCandidate,
    ParabolicDegenerate,
    HessianSingular,
};

std::string to_string(PointClass c);

// Exact pointwise classification. The "candidate" tags mark that telling a
// generic parabolic point from a special one at equality thresholds is the
// solver's job, not a pointwise evaluation.
PointClass classify_point(const ParabolicSystem& sys, const RatPoint& q);

// v^T Hess(f)(q) v.
Rat q_form(const SparsePoly& f, const RatPoint& q, const RatPoint& v);

}  // namespace parabolica
