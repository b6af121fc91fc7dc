#pragma once

#include <string>
#include <vector>

#include "parabolica/solver.hpp"

namespace parabolica {

struct SvgCurve {
    std::string id;
    std::string stroke;
    std::vector<Polyline> polylines;
};

struct SvgMarker {
    double x, y;
};

// Fixed-size deterministic SVG: axes, one <g> per curve, circle markers.
// Byte-identical across runs for identical inputs.
std::string render_svg(const BoxQ& window, const std::vector<SvgCurve>& curves,
                       const std::vector<SvgMarker>& markers);

}  // namespace parabolica
