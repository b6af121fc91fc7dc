#include "parabolica/parabolic.hpp"

namespace parabolica {

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Elliptic: return "elliptic";
        case PointClass::Hyperbolic: return "hyperbolic";
        case PointClass::ParabolicGenericCandidate: return "parabolic-generic-candidate";
        case PointClass::ParabolicSpecialCandidate: return "parabolic-special-candidate";
        case PointClass::ParabolicDegenerate: return "parabolic-degenerate";
        case PointClass::HessianSingular: return "hessian-singular";
    }
    return "?";
}

PointClass classify_point(const ParabolicSystem& sys, const RatPoint& q) {
    Rat hv = eval(sys.h, q);
    if (hv > 0) return PointClass::Elliptic;
    if (hv < 0) return PointClass::Hyperbolic;
    Rat a = eval(sys.fxx, q), b = eval(sys.fxy, q), d = eval(sys.fyy, q);
    if (a == 0 && b == 0 && d == 0) return PointClass::ParabolicDegenerate;
    Rat gx = eval(sys.hx, q), gy = eval(sys.hy, q);
    if (gx == 0 && gy == 0) return PointClass::HessianSingular;
    Rat v1 = eval(sys.e1, q), v2 = eval(sys.e2, q);
    if (v1 == 0 && v2 == 0) return PointClass::ParabolicSpecialCandidate;
    return PointClass::ParabolicGenericCandidate;
}

Rat q_form(const SparsePoly& f, const RatPoint& q, const RatPoint& v) {
    SparsePoly fx = derivative(f, Axis::X);
    SparsePoly fy = derivative(f, Axis::Y);
    Rat a = eval(derivative(fx, Axis::X), q);
    Rat b = eval(derivative(fx, Axis::Y), q);
    Rat d = eval(derivative(fy, Axis::Y), q);
    return a * v.x * v.x + 2 * b * v.x * v.y + d * v.y * v.y;
}

}  // namespace parabolica
