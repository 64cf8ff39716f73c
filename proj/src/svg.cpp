#include "ckc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ckc/kinematics.hpp"

namespace ckc {

namespace {

constexpr int canvas = 640;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const char* stroke_palette[] = {"#4878cf", "#d65f5f", "#6acc65", "#b47cc7",
                                "#c4ad66", "#77bedb", "#ee854a", "#8c613c"};

struct Mapper {
    double x0, y0, scale;  // world -> pixel, y flipped

    double px(double x) const { return (x - x0) * scale; }
    double py(double y) const { return canvas - (y - y0) * scale; }
};

void open_svg(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
        << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << ' '
        << canvas << "\">\n";
    out << "<rect width=\"" << canvas << "\" height=\"" << canvas
        << "\" fill=\"white\"/>\n";
}

}  // namespace

void write_config_svg(std::ostream& out, const ChainSpec& chain,
                      const std::vector<AngleVector>& configs, bool with_circle) {
    // Every joint stays within the total length of the origin, so a square
    // window of that radius fits any configuration.
    double reach = 1.05 * chain.total_length();
    Mapper map{-reach, -reach, canvas / (2.0 * reach)};

    open_svg(out);
    if (with_circle) {
        double r = chain.link(chain.size()) * map.scale;
        out << "<circle cx=\"" << fmt(map.px(0)) << "\" cy=\"" << fmt(map.py(0))
            << "\" r=\"" << fmt(r)
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    std::size_t color = 0;
    for (const AngleVector& beta : configs) {
        out << "<polyline fill=\"none\" stroke=\""
            << stroke_palette[color % (sizeof stroke_palette / sizeof *stroke_palette)]
            << "\" stroke-width=\"1.5\" stroke-opacity=\"0.85\" points=\""
            << fmt(map.px(0)) << ',' << fmt(map.py(0));
        Point2 p;
        for (std::size_t j = 1; j <= beta.size(); ++j) {
            p.x += chain.link(j) * std::cos(beta.at(j));
            p.y += chain.link(j) * std::sin(beta.at(j));
            out << ' ' << fmt(map.px(p.x)) << ',' << fmt(map.py(p.y));
        }
        out << "\"/>\n";
        ++color;
    }
    out << "</svg>\n";
}

void write_region_svg(std::ostream& out, const std::vector<RegionRow>& rows,
                      double cut) {
    double x_lo = -1.0, x_hi = 1.0, y_lo = -cut, y_hi = cut;
    if (!rows.empty()) {
        x_lo = x_hi = rows.front().c4;
        y_lo = y_hi = rows.front().c3;
        for (const RegionRow& r : rows) {
            x_lo = std::min(x_lo, r.c4);
            x_hi = std::max(x_hi, r.c4);
            y_lo = std::min(y_lo, r.c3);
            y_hi = std::max(y_hi, r.c3);
        }
    }
    y_lo = std::min(y_lo, -cut);
    y_hi = std::max(y_hi, cut);
    double span = std::max({x_hi - x_lo, y_hi - y_lo, 1e-9});
    double pad = 0.08 * span;
    Mapper map{x_lo - pad, y_lo - pad, canvas / (span + 2.0 * pad)};

    open_svg(out);
    for (const RegionRow& r : rows) {
        out << "<circle cx=\"" << fmt(map.px(r.c4)) << "\" cy=\""
            << fmt(map.py(r.c3)) << "\" r=\"2\" fill=\""
            << (r.inside_q ? "#4878cf" : "#d3d3d3") << "\"/>\n";
    }
    for (double y : {cut, -cut}) {
        out << "<line x1=\"" << fmt(map.px(x_lo - pad / 2)) << "\" y1=\""
            << fmt(map.py(y)) << "\" x2=\"" << fmt(map.px(x_hi + pad / 2))
            << "\" y2=\"" << fmt(map.py(y))
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    out << "<text x=\"" << canvas - 40 << "\" y=\"" << canvas - 12
        << "\" font-size=\"14\" font-family=\"sans-serif\">C_4</text>\n";
    out << "<text x=\"12\" y=\"20\" font-size=\"14\" "
           "font-family=\"sans-serif\">C_3</text>\n";
    out << "</svg>\n";
}

}  // namespace ckc
