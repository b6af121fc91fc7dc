#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/ieval.hpp"
#include "parabolica/interval.hpp"
#include "parabolica/parabolic.hpp"

namespace parabolica {

struct SolveConfig {
    // Subdivision floor and depth cap; boxes that reach either without a
    // verdict are reported, never dropped.
    double min_width = 1.0 / 1099511627776.0;  // 2^-40
    int max_depth = 60;
    // Relative refinement target for residual intervals on certified points.
    double residual_target = 1.0 / 1073741824.0;  // 2^-30
    long max_boxes = 4000000;
};

struct CertifiedPoint {
    BoxQ enclosure;
    double approx_x = 0.0;
    double approx_y = 0.0;
    bool hessian_smooth = false;
    bool transversal = false;
    bool off_axes = false;
    Interval res_h, res_e1, res_e2;
};

enum class UnresolvedReason {
    DepthExhausted,    // subdivision floor hit without a verdict
    HessianUndecided,  // zero of (e1, e2) certified, smoothness of V(h) not
    AxisTrace,         // undecided region glued to the axes, where the raw
                       // system vanishes identically and the * count never
                       // looks anyway
};

std::string to_string(UnresolvedReason r);

struct UnresolvedCluster {
    BoxQ box;
    UnresolvedReason reason;
    int box_count = 1;
};

struct SolveResult {
    std::vector<CertifiedPoint> points;    // certified TSPPs, canonical order
    std::vector<CertifiedPoint> rejected;  // certified (e1,e2) zeros with h
                                           // certified nonzero (critical
                                           // points of the Hessian)
    std::vector<UnresolvedCluster> unresolved;

    int tspp_star_count() const;
    // True when nothing genuinely undecided remains (AxisTrace entries do
    // not count against resolution).
    bool fully_resolved() const;
};

struct DegenerateSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certified isolation of the common zeros of {h, e1, e2} inside the search
// box. The square subsystem (e1, e2) is solved by subdivision + interval
// Newton after stripping the shared monomial content; membership in V(h)
// then follows from smoothness of the Hessian curve over the enclosure and
// is cross-checked on the residual interval.
SolveResult isolate_tspp(const ParabolicSystem& sys, const BoxQ& search, const SolveConfig& cfg);

struct TransversalityCert {
    bool exists_unique = false;
    bool transversal = false;
    bool hessian_smooth = false;
};

// One-shot certificate over a fixed box; all three answers are sound when
// true and merely undecided when false.
TransversalityCert certify_transversal(const ParabolicSystem& sys, const BoxQ& box,
                                       const SolveConfig& cfg = {});

// --- generic two-polynomial machinery --------------------------------------

struct PairCert {
    bool exists_unique = false;
    bool jacobian_regular = false;
    BoxQ enclosure;
};

PairCert certify_pair(const SparsePoly& p, const SparsePoly& q, const BoxQ& box,
                      const SolveConfig& cfg = {});

struct PairIsolation {
    std::vector<BoxQ> zeros;
    std::vector<BoxQ> unresolved;
};

// All certified zeros of the pair inside the box; no content stripping, no
// flags. Used for intersection experiments and negative controls.
PairIsolation isolate_pair(const SparsePoly& p, const SparsePoly& q, const BoxQ& box,
                           const SolveConfig& cfg = {});

// --- common-factor degeneracy ----------------------------------------------

// True when a and b share a factor of positive total degree. Deterministic:
// univariate content gcds plus a specialised-resultant identity test with
// enough sample points to pin the resultant polynomial.
bool share_positive_factor(const SparsePoly& a, const SparsePoly& b);

// --- implicit curve tracing -------------------------------------------------

using Polyline = std::vector<std::pair<double, double>>;

// Marching squares over an evaluation grid with `resolution` cells per axis;
// crossings are linearly interpolated and chained into polylines.
// Deterministic for fixed inputs.
std::vector<Polyline> trace_curve(const SparsePoly& p, const BoxQ& window, int resolution);

}  // namespace parabolica
