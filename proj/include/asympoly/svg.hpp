#pragma once

/// Deterministic SVG rendering of an instance and a solution polygon:
/// the unit circle, every diameter as a chord, a dot per endpoint, and the
/// selected polygon filled.  All coordinates are printed with fixed
/// precision so identical input yields byte-identical output.

#include <cstdio>
#include <string>

#include "geometry.hpp"

namespace asympoly {

namespace svg_detail {

inline void append_num(std::string& s, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    s += buf;
}

}  // namespace svg_detail

[[nodiscard]] inline auto render_svg(const diameter_set& ds, const vertex_selection& sel) -> std::string {
    if (sel.k() < 3)
        throw std::invalid_argument("render_svg: need at least 3 selected vertices");
    const int n = ds.n();
    const int m = ds.point_count();
    // SVG y grows downward; negate sin so counterclockwise looks counterclockwise.
    auto px = [&](int x) { return std::cos(ds.angle(x)); };
    auto py = [&](int x) { return -std::sin(ds.angle(x)); };

    std::string s;
    s.reserve(2048 + 160 * static_cast<std::size_t>(m));
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"-1.2 -1.2 2.4 2.4\">\n";
    s += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#444444\" stroke-width=\"0.012\"/>\n";
    for (int d = 0; d < n; ++d) {
        s += "  <line class=\"diameter\" x1=\"";
        svg_detail::append_num(s, px(d));
        s += "\" y1=\"";
        svg_detail::append_num(s, py(d));
        s += "\" x2=\"";
        svg_detail::append_num(s, px(d + n));
        s += "\" y2=\"";
        svg_detail::append_num(s, py(d + n));
        s += "\" stroke=\"#aaaaaa\" stroke-width=\"0.006\"/>\n";
    }
    s += "  <path class=\"polygon\" d=\"";
    for (int idx = 0; idx < sel.k(); ++idx) {
        const int x = sel.indices[static_cast<std::size_t>(idx)];
        s += (idx == 0) ? "M " : "L ";
        svg_detail::append_num(s, px(x));
        s += ' ';
        svg_detail::append_num(s, py(x));
        s += ' ';
    }
    s += "Z\" fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"#1c5aa0\" stroke-width=\"0.014\"/>\n";
    for (int x = 0; x < m; ++x) {
        s += "  <circle class=\"endpoint\" cx=\"";
        svg_detail::append_num(s, px(x));
        s += "\" cy=\"";
        svg_detail::append_num(s, py(x));
        s += "\" r=\"0.025\" fill=\"#777777\"/>\n";
    }
    for (int x : sel.indices) {
        s += "  <circle class=\"vertex\" cx=\"";
        svg_detail::append_num(s, px(x));
        s += "\" cy=\"";
        svg_detail::append_num(s, py(x));
        s += "\" r=\"0.04\" fill=\"#1c5aa0\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace asympoly
