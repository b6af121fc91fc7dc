#include "parabolica/patchwork.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "parabolica/geometry.hpp"

namespace parabolica {

bool Lifting::covers(const LatticeSet& s) const {
    for (const auto& e : s)
        if (!values.count(e)) return false;
    return true;
}

Int Lifting::min_over(const LatticeSet& s) const {
    bool first = true;
    Int m(0);
    for (const auto& e : s) {
        auto it = values.find(e);
        if (it == values.end()) throw LiftingError("lifting does not cover requested point");
        if (first || it->second < m) m = it->second;
        first = false;
    }
    if (first) throw LiftingError("min over empty set");
    return m;
}

LatticeSet Lifting::domain() const {
    LatticeSet s;
    for (const auto& [e, v] : values) s.insert(e);
    return s;
}

Lifting normalize_lifting(const std::map<Exp2, Rat>& values) {
    Int l(1);
    for (const auto& [e, v] : values) {
        if (v < 0) throw LiftingError("lifting values must be non-negative");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    Lifting out;
    for (const auto& [e, v] : values) {
        Rat scaled = v * Rat(l);
        out.values[e] = scaled.get_num();
    }
    return out;
}

Lifting lifting_from_csv(const std::string& text) {
    std::map<Exp2, Rat> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
        if (stripped.empty() || stripped[0] == '#') continue;
        std::istringstream ls(stripped);
        std::string fi, fj, fl;
        if (!std::getline(ls, fi, ',') || !std::getline(ls, fj, ',') || !std::getline(ls, fl))
            throw LiftingError("lifting csv line " + std::to_string(lineno) +
                               ": expected 'i,j,lambda'");
        auto vi = parse_rational(fi), vj = parse_rational(fj), vl = parse_rational(fl);
        if (!vi || !vj || !vl || vi->get_den() != 1 || vj->get_den() != 1)
            throw LiftingError("lifting csv line " + std::to_string(lineno) + ": bad fields");
        Exp2 e{static_cast<int>(vi->get_num().get_si()), static_cast<int>(vj->get_num().get_si())};
        if (raw.count(e)) throw LiftingError("lifting csv: duplicate point");
        raw[e] = *vl;
    }
    return normalize_lifting(raw);
}

std::string lifting_to_csv(const Lifting& lift) {
    std::string out;
    for (const auto& [e, v] : lift.values)
        out += std::to_string(e.i) + "," + std::to_string(e.j) + "," + v.get_str() + "\n";
    return out;
}

namespace {

struct Pt3 {
    Int x, y, z;
    Exp2 proj;
};

struct Plane {
    // p x + q y + r z = s with r > 0, gcd(p, q, r, s) = 1.
    Int p, q, r, s;

    friend bool operator<(const Plane& a, const Plane& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.q != b.q) return a.q < b.q;
        if (a.r != b.r) return a.r < b.r;
        return a.s < b.s;
    }
};

std::optional<Plane> plane_through(const Pt3& a, const Pt3& b, const Pt3& c) {
    Int ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    Int vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    Int p = uy * vz - uz * vy;
    Int q = uz * vx - ux * vz;
    Int r = ux * vy - uy * vx;
    if (r == 0) return std::nullopt;  // vertical plane, projections collinear
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int s = p * a.x + q * a.y + r * a.z;
    Int g = gcd(gcd(abs(p), abs(q)), gcd(r, abs(s)));
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
        s /= g;
    }
    return Plane{p, q, r, s};
}

Int plane_eval(const Plane& pl, const Pt3& v) { return pl.p * v.x + pl.q * v.y + pl.r * v.z - pl.s; }

}  // namespace

Subdivision regular_subdivision(const Lifting& lift) {
    std::vector<Pt3> pts;
    std::vector<Exp2> proj;
    for (const auto& [e, v] : lift.values) {
        if (v < 0) throw LiftingError("lifting values must be non-negative");
        pts.push_back({Int(e.i), Int(e.j), v, e});
        proj.push_back(e);
    }
    std::vector<Exp2> hull = convex_hull_2d(proj);
    if (hull.size() < 3) throw DegenerateLiftingError("lifting domain is not two-dimensional");

    auto side = [&](const Pt3& u, const Pt3& v, const Pt3& w) {
        return cross2(u.proj, v.proj, w.proj);
    };

    // Gift wrap around a directed lifted edge: pick, among points strictly on
    // `side_sign` of the projected edge, the one whose plane has every other
    // candidate on or above it.
    auto wrap = [&](const Pt3& u, const Pt3& v, int side_sign) -> std::optional<Plane> {
        const Pt3* w = nullptr;
        Plane current{};
        for (const auto& cand : pts) {
            Int s = side(u, v, cand);
            if (side_sign > 0 ? s <= 0 : s >= 0) continue;
            if (!w) {
                w = &cand;
                current = *plane_through(u, v, cand);
                continue;
            }
            if (plane_eval(current, cand) < 0) {
                w = &cand;
                current = *plane_through(u, v, cand);
            }
        }
        if (!w) return std::nullopt;  // boundary edge of the domain hull
        for (const auto& pt : pts)
            if (plane_eval(current, pt) < 0)
                throw LiftingError("internal: lower hull wrap produced an invalid facet");
        return current;
    };

    auto pt_of = [&](const Exp2& e) -> const Pt3& {
        for (const auto& p : pts)
            if (p.proj == e) return p;
        throw LiftingError("internal: lost lattice point");
    };

    std::map<Plane, Face> faces;
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> wrapped_edges;
    std::vector<std::pair<Exp2, Exp2>> frontier;

    auto register_face = [&](const Plane& pl) {
        if (faces.count(pl)) return;
        Face f;
        std::vector<Exp2> on;
        for (const auto& pt : pts)
            if (plane_eval(pl, pt) == 0) on.push_back(pt.proj);
        f.points_on = on;
        std::sort(f.points_on.begin(), f.points_on.end(), lex_less);
        f.polygon = canonical_polygon(convex_hull_2d(on));
        f.A = Rat(-pl.p, pl.r);
        f.B = Rat(-pl.q, pl.r);
        f.C = Rat(pl.s, pl.r);
        f.A.canonicalize();
        f.B.canonicalize();
        f.C.canonicalize();
        f.normal_integral = (pl.r == 1);
        const std::size_t n = f.polygon.size();
        for (std::size_t k = 0; k < n; ++k) frontier.push_back({f.polygon[k], f.polygon[(k + 1) % n]});
        faces.emplace(pl, std::move(f));
    };

    // Seed from one boundary edge of the domain hull (interior on its left).
    auto first = wrap(pt_of(hull[0]), pt_of(hull[1]), +1);
    if (!first) throw LiftingError("internal: seed wrap found no facet");
    register_face(*first);

    while (!frontier.empty()) {
        auto [a, b] = frontier.back();
        frontier.pop_back();
        auto key = std::minmax(std::pair{a.i, a.j}, std::pair{b.i, b.j});
        if (!wrapped_edges.insert(key).second) continue;
        // The owning face lies left of a->b; the neighbour, if any, right.
        auto pl = wrap(pt_of(a), pt_of(b), -1);
        if (pl) register_face(*pl);
    }

    Subdivision out;
    for (auto& [pl, f] : faces) out.faces.push_back(std::move(f));
    std::sort(out.faces.begin(), out.faces.end(), [](const Face& a, const Face& b) {
        return std::lexicographical_compare(a.polygon.begin(), a.polygon.end(), b.polygon.begin(),
                                            b.polygon.end(), lex_less);
    });

    Int total(0);
    for (const auto& f : out.faces) total += polygon_area2(f.polygon);
    if (total != polygon_area2(hull))
        throw LiftingError("internal: hull facets do not tile the domain");
    return out;
}

bool validate_inducing(const Lifting& lift, const std::vector<std::vector<Exp2>>& claimed) {
    Subdivision sub;
    try {
        sub = regular_subdivision(lift);
    } catch (const DegenerateLiftingError&) {
        return false;
    }
    if (sub.faces.size() != claimed.size()) return false;
    std::vector<std::vector<Exp2>> got, want;
    for (const auto& f : sub.faces) got.push_back(f.polygon);
    for (const auto& c : claimed) want.push_back(canonical_polygon(c));
    auto lesser = [](const std::vector<Exp2>& a, const std::vector<Exp2>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    };
    std::sort(got.begin(), got.end(), lesser);
    std::sort(want.begin(), want.end(), lesser);
    return got == want;
}

bool validate_inducing(const Lifting& lift, const Subdivision& claimed) {
    std::vector<std::vector<Exp2>> polys;
    for (const auto& f : claimed.faces) polys.push_back(f.polygon);
    return validate_inducing(lift, polys);
}

ParamPoly patchworking_polynomial(const SparsePoly& f, const Lifting& lift) {
    ParamPoly out;
    for (const auto& [e, c] : f.terms) {
        auto it = lift.values.find(e);
        if (it == lift.values.end())
            throw LiftingError("patchworking polynomial: lifting does not cover the support");
        if (it->second < 0) throw LiftingError("lifting values must be non-negative");
        if (!it->second.fits_uint_p()) throw LiftingError("lifting value out of range");
        out.terms.emplace(e, UniPoly::monomial(c, static_cast<unsigned>(it->second.get_ui())));
    }
    return out;
}

ParamPoly level_restriction(const ParamPoly& f_t, const Lifting& lift, const Int& r) {
    ParamPoly out;
    for (const auto& [e, c] : f_t.terms) {
        auto it = lift.values.find(e);
        if (it == lift.values.end())
            throw LiftingError("level restriction: lifting does not cover the support");
        if (it->second == r) out.terms.emplace(e, c);
    }
    return out;
}

std::pair<Int, Int> face_normal(const Subdivision& sub, std::size_t face_id) {
    if (face_id >= sub.faces.size()) throw std::out_of_range("face_normal: no such face");
    const Face& f = sub.faces[face_id];
    if (!f.normal_integral)
        throw NonIntegerNormalError(
            "face normal (alpha, beta, 1) is not integral; the face carries no empty "
            "unimodular lifted triangle");
    return {Int(-f.A.get_num()), Int(-f.B.get_num())};
}

LatticeSet face_lattice_points(const Face& face) {
    LatticeSet s;
    for (const auto& e : lattice_points_in(face.polygon)) s.insert(e);
    return s;
}

Int face_area2(const Face& face) { return polygon_area2(face.polygon); }

FlattenResult flatten_face(const ParamPoly& f_t, const Subdivision& sub, std::size_t face_id) {
    auto [alpha, beta] = face_normal(sub, face_id);
    const Face& face = sub.faces[face_id];
    // C is integral whenever the normal is; gamma brings the face to level 0.
    Int gamma = -Int(face.C.get_num());
    if (!alpha.fits_sint_p() || !beta.fits_sint_p() || !gamma.fits_sint_p())
        throw LiftingError("flatten_face: normal out of range");

    FlattenResult out;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = gamma;
    out.flattened = quasihomothety(f_t, static_cast<int>(alpha.get_si()),
                                   static_cast<int>(beta.get_si()),
                                   static_cast<int>(gamma.get_si()));

    LatticeSet on;
    for (const auto& e : face.points_on) on.insert(e);
    out.tile = restrict_to(specialize(f_t, Rat(1)), on);
    if (!(specialize(out.flattened, Rat(0)) == out.tile))
        throw LiftingError(
            "flatten_face: t=0 specialisation differs from the face restriction; the "
            "patchworking polynomial was not built from this subdivision's lifting");
    return out;
}

}  // namespace parabolica
