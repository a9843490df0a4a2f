#include "curvechi/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace curvechi {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const CurveFamily& family, const std::vector<Probe>& probes, SvgOptions options) {
    double lo_x = std::numeric_limits<double>::max(), hi_x = std::numeric_limits<double>::lowest();
    double lo_y = 0, hi_y = 0;
    for (const auto& m : family.members()) {
        for (const auto& s : m.strands()) {
            auto [lo, hi] = s.bounds();
            lo_x = std::min(lo_x, double(lo.x));
            hi_x = std::max(hi_x, double(hi.x));
            lo_y = std::min(lo_y, double(lo.y));
            hi_y = std::max(hi_y, double(hi.y));
        }
    }
    for (const auto& p : probes) {
        lo_x = std::min(lo_x, double(p.x_lo));
        hi_x = std::max(hi_x, double(p.x_hi));
    }
    if (lo_x > hi_x) lo_x = 0, hi_x = 1;
    if (hi_y <= lo_y) hi_y = lo_y + 1;
    lo_x -= 1;
    hi_x += 1;
    hi_y += 1;

    const double inner = options.width - 2 * options.margin;
    const double sx = inner / (hi_x - lo_x);
    const double sy = std::min(sx, 2 * inner / (hi_y - lo_y));
    const double height = (hi_y - lo_y) * sy + 2 * options.margin;
    auto X = [&](double x) { return options.margin + (x - lo_x) * sx; };
    auto Y = [&](double y) { return options.margin + (hi_y - y) * sy; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(options.width) << ' ' << num(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& p : probes) {
        os << "<rect class=\"probe\" x=\"" << num(X(double(p.x_lo))) << "\" y=\"" << num(Y(hi_y)) << "\" width=\""
           << num((p.x_hi - p.x_lo) * sx) << "\" height=\"" << num(Y(0) - Y(hi_y))
           << "\" fill=\"#c8d8f0\" fill-opacity=\"0.6\"/>\n";
    }
    os << "<line class=\"baseline\" x1=\"" << num(X(lo_x)) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(hi_x))
       << "\" y2=\"" << num(Y(0)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    for (const auto& m : family.members()) {
        for (const auto& s : m.strands()) {
            os << "<polyline class=\"curve\" data-id=\"" << m.id() << "\" fill=\"none\" stroke=\"black\" "
               << "stroke-width=\"1.2\" points=\"";
            for (std::size_t i = 0; i < s.size(); ++i) {
                os << (i ? " " : "") << num(X(double(s.points()[i].x))) << ',' << num(Y(double(s.points()[i].y)));
            }
            os << "\"/>\n";
        }
        if (options.labels) {
            const auto& p = m.strands().front().front();
            os << "<text x=\"" << num(X(double(p.x))) << "\" y=\"" << num(Y(double(p.y)) - 3)
               << "\" font-size=\"9\">" << m.id() << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace curvechi
