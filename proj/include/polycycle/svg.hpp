#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "polycycle/ga.hpp"
#include "polycycle/geometry.hpp"
#include "polycycle/instance.hpp"

namespace polycycle {

namespace detail {

inline std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Representative point of the intersection of two intersecting segments,
// for marker placement only (display precision, not part of any count).
inline std::pair<double, double> intersection_marker(const Segment& s, const Segment& t) {
    const double ax = static_cast<double>(s.a.x), ay = static_cast<double>(s.a.y);
    const double d1x = static_cast<double>(s.b.x - s.a.x), d1y = static_cast<double>(s.b.y - s.a.y);
    const double d2x = static_cast<double>(t.b.x - t.a.x), d2y = static_cast<double>(t.b.y - t.a.y);
    const double denom = d1x * d2y - d1y * d2x;
    if (denom != 0.0) {  // supporting lines meet in one point
        const double w = (static_cast<double>(t.a.x) - ax) * d2y -
                         (static_cast<double>(t.a.y) - ay) * d2x;
        const double u = w / denom;
        return {ax + u * d1x, ay + u * d1y};
    }
    // Collinear overlap: average the endpoints that lie on the other segment.
    double sx = 0.0, sy = 0.0;
    int cnt = 0;
    const auto add_if_on = [&](Point p, const Segment& seg) {
        if (orient(seg.a, seg.b, p) == 0 && on_segment_collinear(seg.a, seg.b, p)) {
            sx += static_cast<double>(p.x);
            sy += static_cast<double>(p.y);
            ++cnt;
        }
    };
    add_if_on(s.a, t);
    add_if_on(s.b, t);
    add_if_on(t.a, s);
    add_if_on(t.b, s);
    if (cnt == 0) return {ax, ay};
    return {sx / cnt, sy / cnt};
}

}  // namespace detail

/// Renders the polygon outline, the labeled point set, the embedded cycle
/// and a marker per crossing into a standalone SVG document. Output bytes
/// are a pure function of the inputs.
inline void render_svg(const Instance& inst, const Chromosome& order, std::ostream& out) {
    detail::require_cycle_input(inst.points, order);
    detail::require_polygon_sides(inst.polygon);
    const auto& v = inst.polygon.vertices;
    const std::size_t n = order.size();
    const std::size_t m = v.size();

    Coord min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
    const auto stretch = [&](Point p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    for (const Point& p : v) stretch(p);
    for (const Point& p : inst.points) stretch(p);

    constexpr double kCanvas = 800.0;
    constexpr double kMargin = 40.0;
    const double w = std::max<double>(1.0, static_cast<double>(max_x - min_x));
    const double h = std::max<double>(1.0, static_cast<double>(max_y - min_y));
    const double scale = kCanvas / std::max(w, h);
    const double width = w * scale + 2 * kMargin;
    const double height = h * scale + 2 * kMargin;
    // SVG y grows downward; flip so the drawing matches plane coordinates.
    const auto X = [&](double x) { return kMargin + (x - static_cast<double>(min_x)) * scale; };
    const auto Y = [&](double y) { return kMargin + (static_cast<double>(max_y) - y) * scale; };
    const auto XP = [&](Point p) { return X(static_cast<double>(p.x)); };
    const auto YP = [&](Point p) { return Y(static_cast<double>(p.y)); };
    using detail::fmt2;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt2(width) << " "
        << fmt2(height) << "\">\n";

    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < m; ++i) {
        if (i) out << " ";
        out << fmt2(XP(v[i])) << "," << fmt2(YP(v[i]));
    }
    out << "\" fill=\"#f7f4ec\" stroke=\"#44403a\" stroke-width=\"2\"/>\n";

    out << "  <path d=\"";
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = inst.points[order[i]];
        out << (i == 0 ? "M " : "L ") << fmt2(XP(p)) << " " << fmt2(YP(p)) << " ";
    }
    out << "Z\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>\n";

    // Crossing markers: cycle-with-itself pairs, cycle-with-side pairs, folds.
    std::vector<std::pair<double, double>> markers;
    const auto pt = [&](std::size_t pos) { return inst.points[order[pos % n]]; };
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::adjacent_fold(pt(i), pt(i + 1), pt(i + 2)))
            markers.push_back({static_cast<double>(pt(i + 1).x), static_cast<double>(pt(i + 1).y)});
        const Segment ei{pt(i), pt(i + 1)};
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            const Segment ej{pt(j), pt(j + 1)};
            if (segments_intersect(ei, ej)) markers.push_back(detail::intersection_marker(ei, ej));
        }
        for (std::size_t j = 0; j < m; ++j) {
            const Segment side{v[j], v[(j + 1) % m]};
            if (segments_intersect(ei, side)) markers.push_back(detail::intersection_marker(ei, side));
        }
    }
    for (const auto& [mx, my] : markers)
        out << "  <circle cx=\"" << fmt2(X(mx)) << "\" cy=\"" << fmt2(Y(my))
            << "\" r=\"7\" fill=\"none\" stroke=\"#c0272d\" stroke-width=\"2\" class=\"crossing\"/>\n";

    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        const Point p = inst.points[i];
        out << "  <circle cx=\"" << fmt2(XP(p)) << "\" cy=\"" << fmt2(YP(p))
            << "\" r=\"3\" fill=\"#1d1d1b\"/>\n";
        out << "  <text x=\"" << fmt2(XP(p) + 5) << "\" y=\"" << fmt2(YP(p) - 5)
            << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"#555\">" << i << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace polycycle
