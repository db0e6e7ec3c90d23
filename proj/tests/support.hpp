#pragma once

// Shared fixtures and independent oracles for the test suites. Everything in
// here deliberately avoids the library's predicate implementations where it
// acts as a cross-check (distance sampling, winding numbers, hand-derived
// expected values).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include <polycycle/polycycle.hpp>

namespace testsupport {

using polycycle::Chromosome;
using polycycle::Coord;
using polycycle::GaVersion;
using polycycle::Instance;
using polycycle::Location;
using polycycle::Point;
using polycycle::Polygon;
using polycycle::Rng;
using polycycle::Segment;

// ---------------------------------------------------------------------------
// Fixture instances

inline Polygon square_polygon(Coord lo, Coord hi) {
    return Polygon{{{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}};
}

// Strictly convex regular polygon on the integer grid (rounded; the radius is
// large enough that rounding cannot break convexity).
inline Polygon convex_polygon(int sides, Coord radius = 450) {
    Polygon poly;
    for (int k = 0; k < sides; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / sides;
        poly.vertices.push_back(Point{static_cast<Coord>(std::llround(radius * std::cos(angle))),
                                      static_cast<Coord>(std::llround(radius * std::sin(angle)))});
    }
    return poly;
}

inline Instance square_instance(std::vector<Point> points, Coord lo = -1000, Coord hi = 1000) {
    return Instance{square_polygon(lo, hi), std::move(points), ""};
}

// The U-shaped polygon from the C2 worked example.
inline Polygon u_polygon() {
    return Polygon{{{0, 0}, {20, 0}, {20, 20}, {12, 20}, {12, 8}, {8, 8}, {8, 20}, {0, 20}}};
}

// Three points, one deep in each arm of the U and one in the base: the only
// triangle through them must cross the notch twice, so every order has F = 2.
inline Instance u_instance_forced_crossings() {
    return Instance{u_polygon(), {{2, 18}, {10, 2}, {18, 18}}, ""};
}

// The six gene coordinates shared by the paper's crossover and two-point
// mutation walkthroughs. parent1 of the crossover figure is points[0..5] in
// listed order.
inline std::vector<Point> figure_points() {
    return {{98, 319}, {255, 188}, {168, 418}, {262, 148}, {288, 72}, {337, 210}};
}

inline Instance figure_instance() {
    return square_instance(figure_points(), -1000, 1000);
}

// Convex octagon visited with one contiguous block reversed: the resulting
// cycle has exactly one crossing, between edges 1 (x2,x3) and 5 (x6,x7) in
// the uncross walkthrough's numbering. points[k] is x_{k+1}.
inline Instance octagon_single_cross_instance() {
    const std::vector<Point> hull = {{10, 0}, {7, 7},   {0, 10},  {-7, 7},
                                     {-10, 0}, {-7, -7}, {0, -10}, {7, -7}};
    const std::vector<int> visit = {0, 1, 5, 4, 3, 2, 6, 7};
    std::vector<Point> pts;
    for (const int idx : visit) pts.push_back(hull[idx]);
    return square_instance(std::move(pts), -20, 20);
}

inline Chromosome identity_order(int n) {
    Chromosome c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

inline Chromosome random_order(int n, Rng& rng) {
    Chromosome c = identity_order(n);
    for (std::size_t i = c.size(); i > 1; --i)
        std::swap(c[i - 1], c[rng.below(i)]);
    return c;
}

// ---------------------------------------------------------------------------
// Independent geometric oracles

inline double dist_point_segment(double px, double py, const Segment& s) {
    const double ax = static_cast<double>(s.a.x), ay = static_cast<double>(s.a.y);
    const double vx = static_cast<double>(s.b.x) - ax, vy = static_cast<double>(s.b.y) - ay;
    double t = ((px - ax) * vx + (py - ay) * vy) / (vx * vx + vy * vy);
    t = std::clamp(t, 0.0, 1.0);
    const double dx = ax + t * vx - px;
    const double dy = ay + t * vy - py;
    return std::sqrt(dx * dx + dy * dy);
}

inline double segment_length(const Segment& s) {
    const double dx = static_cast<double>(s.b.x - s.a.x);
    const double dy = static_cast<double>(s.b.y - s.a.y);
    return std::sqrt(dx * dx + dy * dy);
}

enum class ApproxVerdict { Intersect, Disjoint, Inconclusive };

// Dense-sampling intersection oracle for integer segments with coordinates
// bounded by max_coord. Walks `samples` points along the first segment and
// takes the minimum distance to the second.
//
// Conclusiveness uses two facts: (a) a true intersection makes the sampled
// minimum at most half the sampling step (the distance function is
// 1-Lipschitz along the segment); (b) two DISJOINT integer segments are at
// least 1/diag apart, where diag bounds the segment lengths (a nonzero
// integer cross product has magnitude >= 1). Anything between is reported
// Inconclusive and must be skipped by the caller.
inline ApproxVerdict approx_segments_intersect(const Segment& s, const Segment& t,
                                               Coord max_coord, int samples = 10'000) {
    const double ax = static_cast<double>(s.a.x), ay = static_cast<double>(s.a.y);
    const double vx = static_cast<double>(s.b.x) - ax, vy = static_cast<double>(s.b.y) - ay;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const double u = static_cast<double>(k) / (samples - 1);
        best = std::min(best, dist_point_segment(ax + u * vx, ay + u * vy, t));
    }
    const double diag = 2.0 * std::numbers::sqrt2 * static_cast<double>(max_coord);
    const double separation_floor = 1.0 / diag;
    const double step = segment_length(s) / (samples - 1);
    if (best < 0.5 * separation_floor) return ApproxVerdict::Intersect;
    if (best > 0.75 * step + 1e-9) return ApproxVerdict::Disjoint;
    return ApproxVerdict::Inconclusive;
}

// Winding-number classification via summed signed angles; conclusive only
// for points well clear of the boundary.
inline std::optional<Location> winding_classify(Point p, const Polygon& poly) {
    const std::size_t m = poly.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Segment side{poly.vertices[i], poly.vertices[(i + 1) % m]};
        if (dist_point_segment(static_cast<double>(p.x), static_cast<double>(p.y), side) < 1e-6)
            return std::nullopt;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = poly.vertices[i];
        const Point b = poly.vertices[(i + 1) % m];
        const double ax = static_cast<double>(a.x - p.x), ay = static_cast<double>(a.y - p.y);
        const double bx = static_cast<double>(b.x - p.x), by = static_cast<double>(b.y - p.y);
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    const double winding = total / (2.0 * std::numbers::pi);
    if (std::abs(winding) > 0.9) return Location::Inside;
    if (std::abs(winding) < 0.1) return Location::Outside;
    return std::nullopt;
}

}  // namespace testsupport
