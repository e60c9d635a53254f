#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dplane::cli {

namespace {

// Fixed precision keeps the files byte-stable.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<Polyline>& lines, const BBox& box, const SvgOptions& opt) {
    const double w = box.x_max - box.x_min, h = box.t_max - box.t_min;
    const double stroke = 0.002 * std::max(w, h);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.x_min) << ' ' << num(-box.t_max) << ' '
        << num(w) << ' ' << num(h) << "\" width=\"800\" height=\"" << num(800 * h / w) << "\">\n";
    if (!opt.title.empty()) out << "<title>" << escape(opt.title) << "</title>\n";
    if (opt.cone) {
        const Double c = opt.cone_center;
        const double r = std::max(w, h) * 2;
        out << "<g stroke=\"#888\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke) << ' '
            << num(4 * stroke) << "\" fill=\"none\">\n";
        for (double sgn : {1.0, -1.0}) {
            out << "<line class=\"cone\" x1=\"" << num(c.x - r) << "\" y1=\"" << num(-(c.t - sgn * r)) << "\" x2=\""
                << num(c.x + r) << "\" y2=\"" << num(-(c.t + sgn * r)) << "\"/>\n";
        }
        out << "</g>\n";
    }
    out << "<g stroke=\"#1f4e9c\" stroke-width=\"" << num(stroke) << "\" fill=\"none\">\n";
    for (const auto& L : lines) {
        if (L.points.empty()) continue;
        out << "<path data-line-id=\"" << escape(L.id) << "\" d=\"";
        for (std::size_t k = 0; k < L.points.size(); ++k)
            out << (k == 0 ? "M" : " L") << num(L.points[k].x) << ' ' << num(-L.points[k].t);
        out << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace dplane::cli
