#include "jck/svg.hpp"

#include <cstdio>
#include <limits>

namespace jck {

namespace {

// fixed 9-significant-digit formatting keeps output deterministic
void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    out += buf;
}

}  // namespace

SvgBounds svg_bounds(const JordanConfiguration& j, double pad_fraction) {
    SvgBounds b;
    b.xmin = b.ymin = std::numeric_limits<double>::infinity();
    b.xmax = b.ymax = -std::numeric_limits<double>::infinity();
    for (const Curve& c : j.curves)
        for (const Vec2& v : c.poly().vertices()) {
            b.xmin = std::min(b.xmin, v.x);
            b.ymin = std::min(b.ymin, v.y);
            b.xmax = std::max(b.xmax, v.x);
            b.ymax = std::max(b.ymax, v.y);
        }
    if (j.curves.empty()) b = SvgBounds{};
    const double pad = pad_fraction * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
    b.xmin -= pad;
    b.ymin -= pad;
    b.xmax += pad;
    b.ymax += pad;
    return b;
}

std::string render_svg(const JordanConfiguration& j, const SvgBounds& bounds) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    append_num(out, bounds.xmin);
    out += ' ';
    append_num(out, bounds.ymin);
    out += ' ';
    append_num(out, bounds.xmax - bounds.xmin);
    out += ' ';
    append_num(out, bounds.ymax - bounds.ymin);
    out += "\">\n";
    for (const Curve& c : j.curves) {
        out += "  <path d=\"";
        const auto& verts = c.poly().vertices();
        for (size_t i = 0; i < verts.size(); ++i) {
            out += (i == 0) ? "M " : " L ";
            append_num(out, verts[i].x);
            out += ' ';
            append_num(out, verts[i].y);
        }
        out += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"";
        append_num(out, 0.004 * std::max(bounds.xmax - bounds.xmin, bounds.ymax - bounds.ymin));
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace jck
