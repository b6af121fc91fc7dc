#include "parabolica/construction.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "parabolica/geometry.hpp"
#include "parabolica/lp.hpp"

namespace parabolica {

std::string to_string(TileSpec::Kind k) {
    switch (k) {
        case TileSpec::Kind::P1: return "P1";
        case TileSpec::Kind::P2: return "P2";
        case TileSpec::Kind::P3: return "P3";
    }
    return "?";
}

std::string TileSpec::name() const {
    return to_string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SparsePoly construction_polynomial(int d) {
    if (d < 5) throw std::invalid_argument("construction polynomial needs d >= 5");
    SparsePoly f;
    for (int i = 0; i <= d - 4; ++i)
        for (int j = 0; i + j <= d - 4; ++j) f.add_term({i + 2, j + 2}, Rat(1));
    return f;
}

namespace {

SparsePoly tile_polynomial(TileSpec::Kind kind, int a, int b) {
    SparsePoly base;
    switch (kind) {
        case TileSpec::Kind::P1:
            base = poly_monomial(Rat(1), 0, 0);
            base.add_term({1, 0}, Rat(1));
            base.add_term({0, 1}, Rat(1));
            break;
        case TileSpec::Kind::P2:
            base = poly_monomial(Rat(1), 1, 0);
            base.add_term({0, 1}, Rat(1));
            base.add_term({0, 2}, Rat(1));
            break;
        case TileSpec::Kind::P3:
            base = poly_monomial(Rat(1), 1, 0);
            base.add_term({1, 1}, Rat(1));
            base.add_term({0, 2}, Rat(1));
            break;
    }
    return poly_monomial(Rat(1), a, b) * base;
}

TileSpec make_tile(TileSpec::Kind kind, int a, int b) {
    TileSpec t;
    t.kind = kind;
    t.a = a;
    t.b = b;
    switch (kind) {
        case TileSpec::Kind::P1:
            t.triangle = {Exp2{a, b}, Exp2{a + 1, b}, Exp2{a, b + 1}};
            break;
        case TileSpec::Kind::P2:
            t.triangle = {Exp2{a + 1, b}, Exp2{a, b + 1}, Exp2{a, b + 2}};
            break;
        case TileSpec::Kind::P3:
            t.triangle = {Exp2{a + 1, b}, Exp2{a, b + 2}, Exp2{a + 1, b + 1}};
            break;
    }
    t.polynomial = tile_polynomial(kind, a, b);
    return t;
}

}  // namespace

std::vector<TileSpec> build_triangulation(int d) {
    if (d < 5) throw std::invalid_argument("build_triangulation needs d >= 5");
    std::vector<TileSpec> tiles;
    for (int i = 2; i <= d - 3; ++i) tiles.push_back(make_tile(TileSpec::Kind::P1, i, 2));
    for (int k = 2; k <= d - 4; ++k)
        for (int l = 2; l <= d - k - 2; ++l) {
            tiles.push_back(make_tile(TileSpec::Kind::P2, k, l));
            tiles.push_back(make_tile(TileSpec::Kind::P3, k, l));
        }

    // Exact bookkeeping: every tile has doubled area 1, lies in the big
    // triangle, and the areas sum to its doubled area.
    std::vector<Exp2> big{{2, 2}, {d - 2, 2}, {2, d - 2}};
    Int total(0);
    for (const auto& t : tiles) {
        std::vector<Exp2> tri(t.triangle.begin(), t.triangle.end());
        tri = canonical_polygon(tri);
        Int a2 = polygon_area2(tri);
        if (a2 != 1) throw std::logic_error("tile is not unimodular");
        total += a2;
        for (const auto& v : t.triangle)
            if (point_in_polygon(v, big) < 0) throw std::logic_error("tile leaves the triangle");
        if (!(t.polynomial.support() ==
              LatticeSet(t.triangle.begin(), t.triangle.end())))
            throw std::logic_error("tile support mismatch");
    }
    if (total != polygon_area2(big)) throw std::logic_error("tile areas do not cover the triangle");
    return tiles;
}

Lifting build_lifting(int d, const std::vector<TileSpec>& tiles) {
    std::vector<Exp2> domain;
    for (int i = 2; i <= d - 2; ++i)
        for (int j = 2; i + j <= d; ++j) domain.push_back({i, j});
    std::map<Exp2, int> index;
    for (std::size_t k = 0; k < domain.size(); ++k) index[domain[k]] = static_cast<int>(k);

    // Strict bending across every interior edge: the affine extension of one
    // triangle, evaluated at the opposite vertex of the other, must sit at
    // least 1 below the lifted value there. Unimodular triangles make the
    // barycentric weights integers, so gap 1 loses no generality.
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::vector<int>> edge_tiles;
    for (std::size_t t = 0; t < tiles.size(); ++t)
        for (int e = 0; e < 3; ++e) {
            Exp2 u = tiles[t].triangle[e], v = tiles[t].triangle[(e + 1) % 3];
            auto key = std::minmax(std::pair{u.i, u.j}, std::pair{v.i, v.j});
            edge_tiles[key].push_back(static_cast<int>(t));
        }

    std::vector<LinearConstraint> cons;
    auto barycentric_row = [&](const TileSpec& tri, const Exp2& w, const Exp2& target) {
        // target = sum_k c_k * vertex_k affinely; solve the 2x2 system.
        const Exp2 &p0 = tri.triangle[0], &p1 = tri.triangle[1], &p2 = tri.triangle[2];
        Int det = cross2(p0, p1, p2);
        Rat c1 = Rat(cross2(p0, target, p2), det);
        Rat c2 = Rat(cross2(p0, p1, target), det);
        c1.canonicalize();
        c2.canonicalize();
        Rat c0 = Rat(1) - c1 - c2;
        LinearConstraint row;
        row.coeffs[index.at(w)] += Rat(1);
        row.coeffs[index.at(p0)] -= c0;
        row.coeffs[index.at(p1)] -= c1;
        row.coeffs[index.at(p2)] -= c2;
        row.rhs = Rat(1);
        for (auto it = row.coeffs.begin(); it != row.coeffs.end();)
            it = (it->second == 0) ? row.coeffs.erase(it) : std::next(it);
        return row;
    };

    for (const auto& [edge, owners] : edge_tiles) {
        if (owners.size() != 2) continue;
        const TileSpec& t1 = tiles[owners[0]];
        const TileSpec& t2 = tiles[owners[1]];
        auto opposite = [&](const TileSpec& t) {
            for (const auto& v : t.triangle) {
                auto pv = std::pair{v.i, v.j};
                if (pv != edge.first && pv != edge.second) return v;
            }
            throw std::logic_error("degenerate tile edge");
        };
        Exp2 w2 = opposite(t2);
        cons.push_back(barycentric_row(t1, w2, w2));
    }

    auto sol = lp_feasible_point(static_cast<int>(domain.size()), cons);
    if (!sol) throw std::logic_error("triangulation is not regular (LP infeasible)");

    std::map<Exp2, Rat> values;
    for (std::size_t k = 0; k < domain.size(); ++k) values[domain[k]] = (*sol)[k];
    Lifting lift = normalize_lifting(values);

    // Shift the minimum to zero; constant shifts keep every bend.
    Int mn = lift.min_over(lift.domain());
    for (auto& [e, v] : lift.values) v -= mn;

    std::vector<std::vector<Exp2>> claimed;
    for (const auto& t : tiles) claimed.push_back({t.triangle.begin(), t.triangle.end()});
    if (!validate_inducing(lift, claimed))
        throw std::logic_error("lifting failed validation against the tile triangulation");
    return lift;
}

long theorem_bound(int d) { return static_cast<long>(d - 4) * (2L * d - 9); }

int tile_count(const TileSpec& tile, const BoxQ& box, const SolveConfig& cfg) {
    SolveResult res = isolate_tspp(build_system(tile.polynomial), box, cfg);
    if (!res.fully_resolved()) return -1;
    return res.tspp_star_count();
}

std::vector<Rat> default_t_sweep() {
    std::vector<Rat> ts;
    for (int k = 4; k <= 16; ++k) {
        Rat t(1, Int(1) << k);
        ts.push_back(t);
        ts.push_back(-t);
    }
    return ts;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int k = next.fetch_add(1);
                if (k >= n) return;
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

namespace {

Rat max_abs_coeff(const SparsePoly& p) {
    Rat m(0);
    for (const auto& [e, c] : p.terms) m = std::max(m, rat_abs(c));
    return m;
}

}  // namespace

GlueReport reproduce_one(int d, const Rat& t, const ReproduceOptions& opt) {
    if (d < 5) throw std::invalid_argument("d < 5");
    if (d > opt.d_guard && !opt.allow_large)
        throw std::invalid_argument("d exceeds the default guard; pass the override to continue");
    if (t == 0) throw std::invalid_argument("t must be nonzero");

    GlueReport rep;
    rep.d = d;
    rep.t = t;
    rep.bound = theorem_bound(d);

    SparsePoly f = construction_polynomial(d);
    std::vector<TileSpec> tiles = build_triangulation(d);
    Lifting lift = build_lifting(d, tiles);
    Subdivision sub = regular_subdivision(lift);
    ParamPoly f_t = patchworking_polynomial(f, lift);

    rep.per_tile.resize(tiles.size());
    rep.charts.resize(sub.faces.size());

    parallel_for(static_cast<int>(tiles.size() + sub.faces.size()), opt.jobs, [&](int task) {
        if (task < static_cast<int>(tiles.size())) {
            const TileSpec& tile = tiles[task];
            TileCountEntry entry;
            entry.tile = tile;
            entry.expected = tile.expected_count();
            entry.count = tile_count(tile, opt.box, opt.solve);
            entry.resolved = entry.count >= 0;
            rep.per_tile[task] = std::move(entry);
            return;
        }
        std::size_t face_id = static_cast<std::size_t>(task) - tiles.size();
        ChartCount chart;
        chart.face_id = face_id;
        FlattenResult flat = flatten_face(f_t, sub, face_id);
        chart.alpha = flat.alpha;
        chart.beta = flat.beta;
        SparsePoly g = specialize(flat.flattened, t);
        Rat scale_by = max_abs_coeff(g);
        if (scale_by != 0) g = scale(g, Rat(1) / scale_by);
        SolveResult res = isolate_tspp(build_system(g), opt.box, opt.solve);
        chart.resolved = res.fully_resolved();
        // Certified points of the flattened chart map to glued points by the
        // exact coordinate scaling (x, y) -> (t^alpha x, t^beta y).
        Rat sx = rat_pow(t, flat.alpha.get_si());
        Rat sy = rat_pow(t, flat.beta.get_si());
        for (const auto& p : res.points) {
            if (!p.off_axes) continue;
            ++chart.count;
            chart.mapped_enclosures.push_back(
                {rat_interval_scale(p.enclosure.x, sx), rat_interval_scale(p.enclosure.y, sy)});
        }
        rep.charts[face_id] = std::move(chart);
    });

    rep.sum_tiles = 0;
    bool tiles_ok = true;
    for (const auto& e : rep.per_tile) {
        if (!e.resolved) tiles_ok = false;
        rep.sum_tiles += std::max(0, e.count);
    }

    rep.glue_ok = tiles_ok;
    rep.glued_count = 0;
    std::vector<BoxQ> all;
    for (const auto& c : rep.charts) {
        if (!c.resolved) {
            rep.glue_ok = false;
            rep.note = "chart " + std::to_string(c.face_id) + " not fully resolved";
        }
        rep.glued_count += c.count;
        for (const auto& b : c.mapped_enclosures) all.push_back(b);
    }
    for (std::size_t i = 0; i < all.size() && rep.glue_ok; ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!boxq_disjoint(all[i], all[j])) {
                rep.glue_ok = false;
                rep.note = "mapped enclosures overlap; |t| too large to separate charts";
                break;
            }

    rep.monotone = rep.glue_ok && rep.sum_tiles <= rep.glued_count;
    rep.inequality_holds = rep.glue_ok && rep.glued_count >= rep.bound;
    return rep;
}

std::vector<GlueReport> reproduce_theorem(int d, const std::vector<Rat>& ts,
                                          const ReproduceOptions& opt) {
    std::vector<GlueReport> out;
    const std::vector<Rat>& sweep = ts.empty() ? default_t_sweep() : ts;
    for (const auto& t : sweep) out.push_back(reproduce_one(d, t, opt));
    return out;
}

}  // namespace parabolica
