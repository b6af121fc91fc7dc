#include "parabolica/report.hpp"

#include <sstream>

namespace parabolica {

namespace {

// Shortest round-trip decimal form keeps reports byte-stable.
std::string dbl(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Json to_json(const RatInterval& v) { return Json::array({rat_to_string(v.lo), rat_to_string(v.hi)}); }

Json to_json(const BoxQ& b) {
    Json j;
    j["x"] = to_json(b.x);
    j["y"] = to_json(b.y);
    return j;
}

Json to_json(const Interval& v) { return Json::array({dbl(v.lo), dbl(v.hi)}); }

Json to_json(const CertifiedPoint& p) {
    Json j;
    j["enclosure"] = to_json(p.enclosure);
    j["midpoint"] = Json::array({dbl(p.approx_x), dbl(p.approx_y)});
    j["flags"] = Json{{"hessian_smooth", p.hessian_smooth},
                      {"transversal", p.transversal},
                      {"off_axes", p.off_axes}};
    j["residuals"] = Json{{"h", to_json(p.res_h)}, {"e1", to_json(p.res_e1)}, {"e2", to_json(p.res_e2)}};
    return j;
}

Json to_json(const SolveResult& r) {
    Json j;
    j["points"] = Json::array();
    for (const auto& p : r.points) j["points"].push_back(to_json(p));
    j["rejected"] = Json::array();
    for (const auto& p : r.rejected) j["rejected"].push_back(to_json(p));
    j["unresolved"] = Json::array();
    j["axis_clusters"] = Json::array();
    for (const auto& u : r.unresolved) {
        Json e{{"box", to_json(u.box)}, {"reason", to_string(u.reason)}, {"boxes", u.box_count}};
        if (u.reason == UnresolvedReason::AxisTrace)
            j["axis_clusters"].push_back(e);
        else
            j["unresolved"].push_back(e);
    }
    j["tspp_star_count"] = r.tspp_star_count();
    j["fully_resolved"] = r.fully_resolved();
    return j;
}

Json to_json(const Subdivision& s) {
    Json faces = Json::array();
    for (const auto& f : s.faces) {
        Json jf;
        jf["vertices"] = Json::array();
        for (const auto& v : f.polygon) jf["vertices"].push_back(Json::array({v.i, v.j}));
        jf["normal"] = Json::array({rat_to_string(-f.A), rat_to_string(-f.B)});
        jf["normal_integral"] = f.normal_integral;
        jf["level"] = rat_to_string(f.C);
        faces.push_back(jf);
    }
    return Json{{"faces", faces}};
}

Json to_json(const GlueReport& r) {
    Json j;
    j["d"] = r.d;
    j["t"] = rat_to_string(r.t);
    j["bound"] = r.bound;
    Json tiles = Json::array();
    for (const auto& e : r.per_tile) {
        tiles.push_back(Json{{"tile", e.tile.name()},
                             {"count", e.count},
                             {"expected", e.expected},
                             {"resolved", e.resolved}});
    }
    j["per_tile"] = tiles;
    j["sum_tiles"] = r.sum_tiles;
    Json charts = Json::array();
    for (const auto& c : r.charts) {
        Json jc{{"face", c.face_id},
                {"normal", Json::array({c.alpha.get_str(), c.beta.get_str()})},
                {"count", c.count},
                {"resolved", c.resolved}};
        Json encl = Json::array();
        for (const auto& b : c.mapped_enclosures) encl.push_back(to_json(b));
        jc["mapped_enclosures"] = encl;
        charts.push_back(jc);
    }
    j["charts"] = charts;
    j["glued_count"] = r.glued_count;
    j["glue_ok"] = r.glue_ok;
    j["monotone"] = r.monotone;
    j["inequality_holds"] = r.inequality_holds;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string glue_csv_header() { return "d,t,sum_tiles,glued,bound,holds\n"; }

std::string glue_csv_row(const GlueReport& r) {
    std::ostringstream os;
    os << r.d << "," << rat_to_string(r.t) << "," << r.sum_tiles << "," << r.glued_count << ","
       << r.bound << "," << (r.inequality_holds ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace parabolica
