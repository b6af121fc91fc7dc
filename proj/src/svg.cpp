#include "parabolica/svg.hpp"

#include <cstdio>

namespace parabolica {

namespace {

constexpr double kSize = 640.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    // Avoid "-0.000" instability.
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

std::string render_svg(const BoxQ& window, const std::vector<SvgCurve>& curves,
                       const std::vector<SvgMarker>& markers) {
    double x0 = mpq_get_d(window.x.lo.get_mpq_t()), x1 = mpq_get_d(window.x.hi.get_mpq_t());
    double y0 = mpq_get_d(window.y.lo.get_mpq_t()), y1 = mpq_get_d(window.y.hi.get_mpq_t());
    double sx = kSize / (x1 - x0), sy = kSize / (y1 - y0);
    auto px = [&](double x) { return (x - x0) * sx; };
    auto py = [&](double y) { return kSize - (y - y0) * sy; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    out += "<g id=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\" fill=\"none\">\n";
    if (x0 < 0.0 && x1 > 0.0)
        out += "<line x1=\"" + fmt(px(0)) + "\" y1=\"0\" x2=\"" + fmt(px(0)) + "\" y2=\"640\"/>\n";
    if (y0 < 0.0 && y1 > 0.0)
        out += "<line x1=\"0\" y1=\"" + fmt(py(0)) + "\" x2=\"640\" y2=\"" + fmt(py(0)) + "\"/>\n";
    out += "</g>\n";

    for (const auto& c : curves) {
        out += "<g id=\"" + c.id + "\" stroke=\"" + c.stroke +
               "\" stroke-width=\"1.5\" fill=\"none\">\n";
        for (const auto& line : c.polylines) {
            if (line.size() < 2) continue;
            out += "<polyline points=\"";
            for (std::size_t k = 0; k < line.size(); ++k) {
                if (k) out += " ";
                out += fmt(px(line[k].first)) + "," + fmt(py(line[k].second));
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g id=\"tspp\" fill=\"black\" stroke=\"none\">\n";
    for (const auto& m : markers)
        out += "<circle cx=\"" + fmt(px(m.x)) + "\" cy=\"" + fmt(py(m.y)) + "\" r=\"4\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace parabolica
