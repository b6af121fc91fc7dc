#include "parabolica/solver.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace parabolica {

namespace {

// --- interval Newton engine on a square pair --------------------------------

struct PairSystem {
    IPolyGrad f1, f2;
    IPoly j11, j12, j21, j22;

    PairSystem(const SparsePoly& p, const SparsePoly& q)
        : f1(p),
          f2(q),
          j11(derivative(p, Axis::X)),
          j12(derivative(p, Axis::Y)),
          j21(derivative(q, Axis::X)),
          j22(derivative(q, Axis::Y)) {}

    Interval jac_det(const BoxD& b) const {
        Interval a = j11.eval(b.x, b.y), bb = j12.eval(b.x, b.y);
        Interval c = j21.eval(b.x, b.y), d = j22.eval(b.x, b.y);
        return isub(imul(a, d), imul(bb, c));
    }
};

enum class NewtonVerdict { Certified, Empty, Undecided };

struct NewtonStep {
    NewtonVerdict verdict = NewtonVerdict::Undecided;
    BoxD image;  // N(B) intersected with B when nonempty
};

NewtonStep newton_step(const PairSystem& sys, const BoxD& b) {
    double mx = b.x.mid(), my = b.y.mid();
    Interval a = sys.j11.eval(b.x, b.y), bb = sys.j12.eval(b.x, b.y);
    Interval c = sys.j21.eval(b.x, b.y), d = sys.j22.eval(b.x, b.y);
    Interval det = isub(imul(a, d), imul(bb, c));
    if (det.contains_zero()) return {NewtonVerdict::Undecided, b};
    Interval f1 = sys.f1.value().eval_point(mx, my);
    Interval f2 = sys.f2.value().eval_point(mx, my);
    Interval dx = idiv(isub(imul(d, f1), imul(bb, f2)), det);
    Interval dy = idiv(isub(imul(a, f2), imul(c, f1)), det);
    Interval nx = isub({mx, mx}, dx);
    Interval ny = isub({my, my}, dy);
    if (idisjoint(nx, b.x) || idisjoint(ny, b.y)) return {NewtonVerdict::Empty, {}};
    NewtonStep out;
    out.image = {iintersect(nx, b.x), iintersect(ny, b.y)};
    if (isubset_strict(nx, b.x) && isubset_strict(ny, b.y)) out.verdict = NewtonVerdict::Certified;
    return out;
}

// Contract a certified enclosure until the width gain stalls.
BoxD refine_enclosure(const PairSystem& sys, BoxD e, int iters) {
    for (int k = 0; k < iters; ++k) {
        NewtonStep st = newton_step(sys, e);
        if (st.verdict == NewtonVerdict::Empty) break;  // numerically impossible, keep last
        if (!st.image.x.valid() || !st.image.y.valid()) break;
        double before = e.max_width();
        e = st.image;
        if (e.max_width() > 0.9 * before) break;
    }
    return e;
}

struct RawIsolation {
    std::vector<BoxD> zeros;
    std::vector<BoxD> floor_boxes;
};

struct SplitScore {
    double x = 0.0;
    double y = 0.0;
};

// Exclusion test that also reports how much each coordinate's width feeds
// the enclosure, which steers the bisection direction.
bool excluded(const PairSystem& sys, const BoxD& b, SplitScore* score = nullptr) {
    double wx = b.x.width(), wy = b.y.width();
    for (const IPolyGrad* f : {&sys.f1, &sys.f2}) {
        Interval plain = f->value().eval(b.x, b.y);
        if (!plain.contains_zero()) return true;
        double mx = b.x.mid(), my = b.y.mid();
        Interval gx = f->dx().eval(b.x, b.y);
        Interval gy = f->dy().eval(b.x, b.y);
        Interval centered = f->value().eval_point(mx, my);
        centered = iadd(centered, imul(gx, isub(b.x, {mx, mx})));
        centered = iadd(centered, imul(gy, isub(b.y, {my, my})));
        Interval tight = iintersect(plain, centered);
        if (!tight.valid()) tight = plain;
        if (!tight.contains_zero()) return true;
        if (score) {
            score->x = std::max(score->x, gx.mag() * wx);
            score->y = std::max(score->y, gy.mag() * wy);
        }
    }
    return false;
}

RawIsolation isolate_raw(const PairSystem& sys, const BoxD& search, const SolveConfig& cfg) {
    RawIsolation out;
    struct Task {
        BoxD box;
        int lx, ly;  // per-dimension split levels
    };
    std::vector<Task> stack{{search, 0, 0}};
    long processed = 0;
    while (!stack.empty()) {
        Task task = stack.back();
        stack.pop_back();
        BoxD b = task.box;
        if (++processed > cfg.max_boxes)
            throw SolverLimitError("subdivision budget exceeded; tighten the search box");
        // Narrow in place a few times before paying for a split.
        bool resolved = false;
        SplitScore score;
        for (int pass = 0; pass < 3 && !resolved; ++pass) {
            score = SplitScore{};
            if (excluded(sys, b, &score)) {
                resolved = true;
                break;
            }
            NewtonStep st = newton_step(sys, b);
            if (st.verdict == NewtonVerdict::Empty) {
                resolved = true;
                break;
            }
            if (st.verdict == NewtonVerdict::Certified) {
                out.zeros.push_back(refine_enclosure(sys, st.image, 60));
                resolved = true;
                break;
            }
            if (st.image.x.valid() && st.image.y.valid() &&
                st.image.max_width() < 0.8 * b.max_width()) {
                b = st.image;
                continue;
            }
            break;
        }
        if (resolved) continue;
        bool x_done = b.x.width() <= cfg.min_width || task.lx >= cfg.max_depth;
        bool y_done = b.y.width() <= cfg.min_width || task.ly >= cfg.max_depth;
        if (x_done && y_done) {
            out.floor_boxes.push_back(b);
            continue;
        }
        // Bisect the coordinate whose uncertainty dominates; near a regular
        // zero both gradients are comparable, so boxes balance on their own.
        bool split_x = score.x >= score.y;
        if (split_x && x_done) split_x = false;
        if (!split_x && y_done) split_x = true;
        if (split_x) {
            double mx = b.x.mid();
            stack.push_back({{{b.x.lo, mx}, b.y}, task.lx + 1, task.ly});
            stack.push_back({{{mx, b.x.hi}, b.y}, task.lx + 1, task.ly});
        } else {
            double my = b.y.mid();
            stack.push_back({{b.x, {b.y.lo, my}}, task.lx, task.ly + 1});
            stack.push_back({{b.x, {my, b.y.hi}}, task.lx, task.ly + 1});
        }
    }
    return out;
}

bool boxes_touch(const BoxD& a, const BoxD& b) {
    return !(a.x.hi < b.x.lo || b.x.hi < a.x.lo || a.y.hi < b.y.lo || b.y.hi < a.y.lo);
}

std::vector<std::pair<BoxD, int>> cluster_boxes(std::vector<BoxD> boxes) {
    std::vector<std::pair<BoxD, int>> clusters;
    for (const auto& b : boxes) clusters.push_back({b, 1});
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < clusters.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j)
                if (boxes_touch(clusters[i].first, clusters[j].first)) {
                    clusters[i].first = {ihull(clusters[i].first.x, clusters[j].first.x),
                                         ihull(clusters[i].first.y, clusters[j].first.y)};
                    clusters[i].second += clusters[j].second;
                    clusters.erase(clusters.begin() + j);
                    merged = true;
                }
    }
    return clusters;
}

// --- degeneracy detection ----------------------------------------------------

int max_i(const SparsePoly& p) {
    int m = 0;
    for (const auto& [e, c] : p.terms) m = std::max(m, e.i);
    return m;
}

int max_j(const SparsePoly& p) {
    int m = 0;
    for (const auto& [e, c] : p.terms) m = std::max(m, e.j);
    return m;
}

// Coefficient of y^j as a polynomial in x.
UniPoly y_slice(const SparsePoly& p, int j) {
    std::vector<Rat> c;
    for (const auto& [e, v] : p.terms) {
        if (e.j != j) continue;
        if (static_cast<int>(c.size()) <= e.i) c.resize(e.i + 1, Rat(0));
        c[e.i] = v;
    }
    return UniPoly(std::move(c));
}

UniPoly x_slice(const SparsePoly& p, int i) {
    std::vector<Rat> c;
    for (const auto& [e, v] : p.terms) {
        if (e.i != i) continue;
        if (static_cast<int>(c.size()) <= e.j) c.resize(e.j + 1, Rat(0));
        c[e.j] = v;
    }
    return UniPoly(std::move(c));
}

UniPoly content_in_x(const SparsePoly& p) {
    UniPoly g;
    for (int j = 0; j <= max_j(p); ++j) {
        UniPoly s = y_slice(p, j);
        if (!s.is_zero()) g = uni_gcd(g, s);
    }
    return g;
}

UniPoly content_in_y(const SparsePoly& p) {
    UniPoly g;
    for (int i = 0; i <= max_i(p); ++i) {
        UniPoly s = x_slice(p, i);
        if (!s.is_zero()) g = uni_gcd(g, s);
    }
    return g;
}

SparsePoly clear_denominators(const SparsePoly& p) {
    Int l(1);
    for (const auto& [e, c] : p.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return scale(p, Rat(l));
}

// UniPoly in y obtained by substituting x = x0.
UniPoly specialize_x(const SparsePoly& p, const Rat& x0) {
    std::vector<Rat> xp{Rat(1)};
    std::vector<Rat> c(max_j(p) + 1, Rat(0));
    for (const auto& [e, v] : p.terms) {
        while (static_cast<int>(xp.size()) <= e.i) xp.push_back(xp.back() * x0);
        c[e.j] += v * xp[e.i];
    }
    return UniPoly(std::move(c));
}

constexpr unsigned long long kPrime = 2305843009213693951ull;  // 2^61 - 1

unsigned long long mulmod(unsigned long long a, unsigned long long b) {
    return static_cast<unsigned long long>((static_cast<__int128>(a) * b) % kPrime);
}

unsigned long long powmod(unsigned long long a, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
        if (e & 1ull) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// Rat reduced mod the fixed prime; nullopt when the denominator collapses.
std::optional<unsigned long long> rat_modp(const Rat& q) {
    static const Int p("2305843009213693951");
    Int nr = q.get_num() % p;
    if (nr < 0) nr += p;
    Int dr = q.get_den() % p;
    if (dr == 0) return std::nullopt;
    unsigned long long nv = mpz_get_ui(nr.get_mpz_t());
    unsigned long long dv = mpz_get_ui(dr.get_mpz_t());
    return mulmod(nv, powmod(dv, kPrime - 2));
}

// Resultant of two univariate polynomials mod p; nullopt when any
// coefficient fails to reduce. A nonzero answer certifies the exact
// resultant is nonzero.
std::optional<unsigned long long> resultant_modp(const UniPoly& a, const UniPoly& b) {
    std::vector<unsigned long long> f, g;
    for (const auto& c : a.coeffs()) {
        auto v = rat_modp(c);
        if (!v) return std::nullopt;
        f.push_back(*v);
    }
    for (const auto& c : b.coeffs()) {
        auto v = rat_modp(c);
        if (!v) return std::nullopt;
        g.push_back(*v);
    }
    auto trim = [](std::vector<unsigned long long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(f);
    trim(g);
    // Degree drop mod p would invalidate the correspondence; bail out.
    if (f.size() != a.coeffs().size() || g.size() != b.coeffs().size()) return std::nullopt;
    if (f.empty() || g.empty()) return 0;
    unsigned long long res = 1;
    bool neg = false;
    while (g.size() > 1) {
        std::size_t df = f.size() - 1, dg = g.size() - 1;
        if (df < dg) {
            std::swap(f, g);
            if ((df % 2) && (dg % 2)) neg = !neg;
            continue;
        }
        // f mod g
        std::vector<unsigned long long> r = f;
        unsigned long long inv = powmod(g.back(), kPrime - 2);
        for (std::size_t k = df - dg + 1; k-- > 0;) {
            unsigned long long c = mulmod(r[k + dg], inv);
            if (c == 0) continue;
            for (std::size_t t = 0; t <= dg; ++t) {
                unsigned long long sub = mulmod(c, g[t]);
                r[k + t] = (r[k + t] + kPrime - sub) % kPrime;
            }
        }
        trim(r);
        std::size_t dr = r.empty() ? 0 : r.size() - 1;
        if (r.empty()) return 0;
        if ((df % 2) && (dg % 2)) neg = !neg;
        res = mulmod(res, powmod(g.back(), df - dr));
        f = std::move(g);
        g = std::move(r);
    }
    res = mulmod(res, powmod(g[0], f.size() - 1));
    if (neg) res = (kPrime - res) % kPrime;
    return res;
}

}  // namespace

bool share_positive_factor(const SparsePoly& a_in, const SparsePoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return true;
    SparsePoly a = clear_denominators(a_in);
    SparsePoly b = clear_denominators(b_in);
    if (uni_gcd(content_in_x(a), content_in_x(b)).degree() >= 1) return true;
    if (uni_gcd(content_in_y(a), content_in_y(b)).degree() >= 1) return true;
    int dya = max_j(a), dyb = max_j(b);
    if (dya == 0 || dyb == 0) return false;  // any shared factor would be pure-x
    long bound = static_cast<long>(max_i(a)) * dyb + static_cast<long>(max_i(b)) * dya;
    UniPoly lca = y_slice(a, dya), lcb = y_slice(b, dyb);
    long samples = 0;
    for (long k = 0; samples <= bound; ++k) {
        Rat x0 = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k / 2 + 1));
        if (lca.eval(x0) == 0 || lcb.eval(x0) == 0) continue;
        UniPoly fa = specialize_x(a, x0), fb = specialize_x(b, x0);
        auto fast = resultant_modp(fa, fb);
        if (fast && *fast != 0) return false;
        if (uni_resultant(fa, fb) != 0) return false;
        ++samples;
    }
    return true;
}

// --- public solver -----------------------------------------------------------

std::string to_string(UnresolvedReason r) {
    switch (r) {
        case UnresolvedReason::DepthExhausted: return "depth-exhausted";
        case UnresolvedReason::HessianUndecided: return "hessian-undecided";
        case UnresolvedReason::AxisTrace: return "axis-trace";
    }
    return "?";
}

int SolveResult::tspp_star_count() const {
    int n = 0;
    for (const auto& p : points)
        if (p.off_axes) ++n;
    return n;
}

bool SolveResult::fully_resolved() const {
    for (const auto& u : unresolved)
        if (u.reason != UnresolvedReason::AxisTrace) return false;
    return true;
}

namespace {

bool rat_interval_off_zero(const RatInterval& v) { return v.lo > 0 || v.hi < 0; }

bool interval_off_zero(const Interval& v) { return v.lo > 0.0 || v.hi < 0.0; }

struct FlagPolys {
    IPolyGrad h, hx, hy;
    IPolyGrad e1, e2;  // unreduced
    IPoly de1x, de1y, de2x, de2y;

    FlagPolys(const ParabolicSystem& sys)
        : h(sys.h),
          hx(sys.hx),
          hy(sys.hy),
          e1(sys.e1),
          e2(sys.e2),
          de1x(derivative(sys.e1, Axis::X)),
          de1y(derivative(sys.e1, Axis::Y)),
          de2x(derivative(sys.e2, Axis::X)),
          de2y(derivative(sys.e2, Axis::Y)) {}

    Interval det(const BoxD& b) const {
        return isub(imul(de1x.eval(b.x, b.y), de2y.eval(b.x, b.y)),
                    imul(de1y.eval(b.x, b.y), de2x.eval(b.x, b.y)));
    }
};

}  // namespace

SolveResult isolate_tspp(const ParabolicSystem& sys, const BoxQ& search, const SolveConfig& cfg) {
    if (sys.e1.is_zero() || sys.e2.is_zero())
        throw DegenerateSystemError(
            "e1 and/or e2 vanish identically; the h, e1, e2 zero sets are not isolated");

    Exp2 c1 = monomial_content(sys.e1);
    Exp2 c2 = monomial_content(sys.e2);
    SparsePoly r1 = strip_monomial(sys.e1, c1);
    SparsePoly r2 = strip_monomial(sys.e2, c2);
    bool axis_x_sensitive = c1.i > 0 || c2.i > 0;
    bool axis_y_sensitive = c1.j > 0 || c2.j > 0;

    SolveResult out;
    bool r1_const = r1.degree() && *r1.degree() == 0;
    bool r2_const = r2.degree() && *r2.degree() == 0;
    if (r1_const || r2_const) return out;  // no off-axis zeros at all

    if (share_positive_factor(r1, r2))
        throw DegenerateSystemError(
            "h, e1, e2 admit a shared factor of positive degree; zeros are not isolated");

    PairSystem pair(r1, r2);
    FlagPolys flags(sys);
    BoxD searchd = boxq_to_boxd(search);
    RawIsolation raw = isolate_raw(pair, searchd, cfg);

    std::vector<BoxD> axis_boxes, hard_boxes, hessian_boxes;

    for (BoxD e : raw.zeros) {
        bool touches_x_axis = e.x.contains(0.0);
        bool touches_y_axis = e.y.contains(0.0);
        if ((axis_x_sensitive && touches_x_axis) || (axis_y_sensitive && touches_y_axis)) {
            axis_boxes.push_back(e);
            continue;
        }
        // Push the enclosure until the h and jacobian tests settle.
        Interval res_h, det_orig;
        bool smooth = false, trans = false, h_zero_excluded = false, h_zero_included = false;
        for (int pass = 0; pass < 6; ++pass) {
            res_h = flags.h.eval_tight(e);
            h_zero_excluded = interval_off_zero(res_h);
            h_zero_included = res_h.contains_zero();
            Interval gx = flags.hx.eval_tight(e), gy = flags.hy.eval_tight(e);
            smooth = interval_off_zero(gx) || interval_off_zero(gy);
            det_orig = flags.det(e);
            trans = interval_off_zero(det_orig);
            if (h_zero_excluded || (smooth && trans)) break;
            BoxD tighter = refine_enclosure(pair, e, 12);
            if (tighter.max_width() >= 0.95 * e.max_width()) break;
            e = tighter;
        }

        CertifiedPoint pt;
        pt.enclosure = boxd_to_boxq(e);
        pt.approx_x = e.x.mid();
        pt.approx_y = e.y.mid();
        pt.hessian_smooth = smooth;
        pt.transversal = trans;
        pt.off_axes = rat_interval_off_zero(pt.enclosure.x) && rat_interval_off_zero(pt.enclosure.y);
        pt.res_h = res_h;
        pt.res_e1 = flags.e1.eval_tight(e);
        pt.res_e2 = flags.e2.eval_tight(e);

        if (h_zero_excluded) {
            out.rejected.push_back(std::move(pt));
        } else if (h_zero_included && smooth && trans) {
            // With grad h nonzero across the enclosure, the certified zero of
            // (e1, e2) forces h = 0 exactly at that point.
            out.points.push_back(std::move(pt));
        } else {
            hessian_boxes.push_back(e);
        }
    }

    for (const BoxD& b : raw.floor_boxes) {
        bool tx = b.x.contains(0.0), ty = b.y.contains(0.0);
        if ((axis_x_sensitive && tx) || (axis_y_sensitive && ty))
            axis_boxes.push_back(b);
        else
            hard_boxes.push_back(b);
    }

    for (auto& [box, count] : cluster_boxes(std::move(axis_boxes)))
        out.unresolved.push_back({boxd_to_boxq(box), UnresolvedReason::AxisTrace, count});
    for (auto& [box, count] : cluster_boxes(std::move(hard_boxes)))
        out.unresolved.push_back({boxd_to_boxq(box), UnresolvedReason::DepthExhausted, count});
    for (auto& [box, count] : cluster_boxes(std::move(hessian_boxes)))
        out.unresolved.push_back({boxd_to_boxq(box), UnresolvedReason::HessianUndecided, count});

    auto by_corner = [](const auto& a, const auto& b) {
        if (a.enclosure.x.lo != b.enclosure.x.lo) return a.enclosure.x.lo < b.enclosure.x.lo;
        return a.enclosure.y.lo < b.enclosure.y.lo;
    };
    std::sort(out.points.begin(), out.points.end(), by_corner);
    std::sort(out.rejected.begin(), out.rejected.end(), by_corner);
    std::sort(out.unresolved.begin(), out.unresolved.end(), [](const auto& a, const auto& b) {
        if (a.box.x.lo != b.box.x.lo) return a.box.x.lo < b.box.x.lo;
        return a.box.y.lo < b.box.y.lo;
    });

    for (std::size_t i = 0; i + 1 < out.points.size(); ++i)
        if (!boxq_disjoint(out.points[i].enclosure, out.points[i + 1].enclosure))
            throw SolverLimitError("internal: certified enclosures not pairwise disjoint");

    return out;
}

TransversalityCert certify_transversal(const ParabolicSystem& sys, const BoxQ& box,
                                       const SolveConfig& cfg) {
    (void)cfg;
    TransversalityCert cert;
    PairSystem pair(sys.e1, sys.e2);
    FlagPolys flags(sys);
    BoxD b = boxq_to_boxd(box);

    Interval gx = flags.hx.eval_tight(b), gy = flags.hy.eval_tight(b);
    cert.hessian_smooth = interval_off_zero(gx) || interval_off_zero(gy);
    cert.transversal = interval_off_zero(flags.det(b));

    if (excluded(pair, b)) return cert;  // exists_unique stays false
    BoxD cur = b;
    for (int k = 0; k < 20; ++k) {
        NewtonStep st = newton_step(pair, cur);
        if (st.verdict == NewtonVerdict::Empty) return cert;
        if (st.verdict == NewtonVerdict::Certified) {
            cert.exists_unique = true;
            return cert;
        }
        if (!st.image.x.valid() || !st.image.y.valid()) return cert;
        if (st.image.max_width() >= 0.9 * cur.max_width()) return cert;
        cur = st.image;
    }
    return cert;
}

PairCert certify_pair(const SparsePoly& p, const SparsePoly& q, const BoxQ& box,
                      const SolveConfig& cfg) {
    (void)cfg;
    PairCert cert;
    PairSystem pair(p, q);
    BoxD b = boxq_to_boxd(box);
    cert.jacobian_regular = !pair.jac_det(b).contains_zero();
    cert.enclosure = box;
    if (excluded(pair, b)) return cert;
    BoxD cur = b;
    for (int k = 0; k < 20; ++k) {
        NewtonStep st = newton_step(pair, cur);
        if (st.verdict == NewtonVerdict::Empty) return cert;
        if (st.verdict == NewtonVerdict::Certified) {
            cert.exists_unique = true;
            cert.enclosure = boxd_to_boxq(refine_enclosure(pair, st.image, 40));
            return cert;
        }
        if (!st.image.x.valid() || !st.image.y.valid()) return cert;
        if (st.image.max_width() >= 0.9 * cur.max_width()) return cert;
        cur = st.image;
    }
    return cert;
}

PairIsolation isolate_pair(const SparsePoly& p, const SparsePoly& q, const BoxQ& box,
                           const SolveConfig& cfg) {
    PairSystem pair(p, q);
    RawIsolation raw = isolate_raw(pair, boxq_to_boxd(box), cfg);
    PairIsolation out;
    for (const auto& z : raw.zeros) out.zeros.push_back(boxd_to_boxq(z));
    for (auto& [b, count] : cluster_boxes(std::move(raw.floor_boxes)))
        out.unresolved.push_back(boxd_to_boxq(b));
    auto by_corner = [](const BoxQ& a, const BoxQ& b) {
        if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
        return a.y.lo < b.y.lo;
    };
    std::sort(out.zeros.begin(), out.zeros.end(), by_corner);
    std::sort(out.unresolved.begin(), out.unresolved.end(), by_corner);
    return out;
}

}  // namespace parabolica
