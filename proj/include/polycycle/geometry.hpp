#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace polycycle {

using Coord = std::int64_t;

/// Coordinates are capped so every cross product of coordinate differences
/// fits in 64-bit signed arithmetic with a wide margin.
inline constexpr Coord kCoordLimit = 1'000'000;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline bool coords_in_range(Point p) {
    return std::llabs(p.x) <= kCoordLimit && std::llabs(p.y) <= kCoordLimit;
}

/// A closed segment with distinct endpoints.
struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_) : a(a_), b(b_) {
        if (a == b) throw std::invalid_argument("Segment: endpoints must be distinct");
    }
};

/// Vertex ring of a polygon; the side between back() and front() is implicit.
struct Polygon {
    std::vector<Point> vertices;
};

/// Sign of the cross product (q - p) x (r - p): +1 counter-clockwise turn,
/// 0 collinear, -1 clockwise turn. Exact for coordinates within kCoordLimit.
inline int orient(Point p, Point q, Point r) {
    const Coord cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return (cross > 0) - (cross < 0);
}

namespace detail {

// Assumes p is collinear with the line through a and b; true iff p lies
// within the closed segment.
inline bool on_segment_collinear(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace detail

/// True iff the closed segments share at least one point. Proper crossings,
/// endpoint contact, T-junctions and collinear overlap all count. Symmetric
/// in its arguments and invariant under reversing either segment.
inline bool segments_intersect(const Segment& s, const Segment& t) {
    const int d1 = orient(t.a, t.b, s.a);
    const int d2 = orient(t.a, t.b, s.b);
    const int d3 = orient(s.a, s.b, t.a);
    const int d4 = orient(s.a, s.b, t.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && detail::on_segment_collinear(t.a, t.b, s.a)) return true;
    if (d2 == 0 && detail::on_segment_collinear(t.a, t.b, s.b)) return true;
    if (d3 == 0 && detail::on_segment_collinear(s.a, s.b, t.a)) return true;
    if (d4 == 0 && detail::on_segment_collinear(s.a, s.b, t.b)) return true;
    return false;
}

/// True iff the segments cross at a single interior point of both
/// (strictly opposite orientations on both sides).
inline bool segments_cross_properly(const Segment& s, const Segment& t) {
    const int d1 = orient(t.a, t.b, s.a);
    const int d2 = orient(t.a, t.b, s.b);
    const int d3 = orient(s.a, s.b, t.a);
    const int d4 = orient(s.a, s.b, t.b);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

enum class Location { Inside, Boundary, Outside };

/// Exact point location by ray casting. Boundary contact (sides inclusive of
/// vertices) is reported as Location::Boundary. Assumes the polygon is simple.
inline Location point_in_polygon(Point p, const Polygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    if (m < 3) throw std::invalid_argument("point_in_polygon: polygon needs at least 3 vertices");
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const Point a = v[j];
        const Point b = v[i];
        if (orient(a, b, p) == 0 && detail::on_segment_collinear(a, b, p))
            return Location::Boundary;
        // Horizontal ray towards +x, half-open in y so vertices count once.
        if ((a.y > p.y) != (b.y > p.y)) {
            if (b.y > a.y ? orient(a, b, p) > 0 : orient(a, b, p) < 0) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

/// Twice the signed area (positive iff the ring is counter-clockwise).
inline long long polygon_signed_area_doubled(const Polygon& poly) {
    const auto& v = poly.vertices;
    long long s = 0;
    for (std::size_t i = 0, m = v.size(); i < m; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % m];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

namespace detail {

// Adjacent edges (prev->shared) and (shared->next) overlap beyond the shared
// vertex iff the three points are collinear and prev, next lie on the same
// side of it (a 180-degree fold).
inline bool adjacent_fold(Point prev, Point shared, Point next) {
    if (orient(prev, shared, next) != 0) return false;
    const Coord dot = (prev.x - shared.x) * (next.x - shared.x) +
                      (prev.y - shared.y) * (next.y - shared.y);
    return dot > 0;
}

}  // namespace detail

/// True iff no two non-adjacent sides intersect and no two adjacent sides
/// overlap beyond their shared vertex. O(m^2) pairwise test; returns false
/// (rather than throwing) on degenerate rings such as repeated consecutive
/// vertices.
inline bool polygon_is_simple(const Polygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (v[i] == v[(i + 1) % m]) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (detail::adjacent_fold(v[i], v[(i + 1) % m], v[(i + 2) % m])) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Segment si{v[i], v[(i + 1) % m]};
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // wrap-adjacent pair
            if (segments_intersect(si, Segment{v[j], v[(j + 1) % m]})) return false;
        }
    }
    return true;
}

namespace detail {

inline void require_cycle_input(std::span<const Point> points, std::span<const int> order) {
    const std::size_t n = points.size();
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 points");
    if (order.size() != n) throw std::invalid_argument("cycle: order length does not match point count");
    std::vector<char> seen(n, 0);
    for (const int idx : order) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[idx])
            throw std::invalid_argument("cycle: order is not a permutation of 0..n-1");
        seen[idx] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("cycle: points must be pairwise distinct");
}

// C1 without input validation. Edge i runs from order position i to i+1 mod n.
inline int self_crossings_unchecked(std::span<const Point> points, std::span<const int> order) {
    const std::size_t n = order.size();
    const auto pt = [&](std::size_t pos) { return points[order[pos % n]]; };
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacent_fold(pt(i), pt(i + 1), pt(i + 2))) ++count;
        const Segment ei{pt(i), pt(i + 1)};
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // wrap-adjacent pair
            if (segments_intersect(ei, Segment{pt(j), pt(j + 1)})) ++count;
        }
    }
    return count;
}

// C2 without input validation: intersecting (cycle edge, polygon side) pairs.
inline int polygon_crossings_unchecked(std::span<const Point> points, std::span<const int> order,
                                       const Polygon& poly) {
    const std::size_t n = order.size();
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    const auto pt = [&](std::size_t pos) { return points[order[pos % n]]; };
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Segment ei{pt(i), pt(i + 1)};
        for (std::size_t j = 0; j < m; ++j)
            if (segments_intersect(ei, Segment{v[j], v[(j + 1) % m]})) ++count;
    }
    return count;
}

inline void require_polygon_sides(const Polygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0, m = v.size(); i < m; ++i)
        if (v[i] == v[(i + 1) % m])
            throw std::invalid_argument("polygon has a zero-length side");
}

}  // namespace detail

/// C1: crossings of the cycle with itself — intersecting non-adjacent edge
/// pairs, plus adjacent edge pairs folded back collinearly over their shared
/// vertex. A cycle is a simple closed curve iff this is zero.
inline int cycle_self_crossings(std::span<const Point> points, std::span<const int> order) {
    detail::require_cycle_input(points, order);
    return detail::self_crossings_unchecked(points, order);
}

/// C2: number of (cycle edge, polygon side) pairs that share at least one
/// point. An edge exiting and re-entering across two sides contributes 2.
inline int cycle_polygon_crossings(std::span<const Point> points, std::span<const int> order,
                                   const Polygon& poly) {
    detail::require_cycle_input(points, order);
    detail::require_polygon_sides(poly);
    return detail::polygon_crossings_unchecked(points, order, poly);
}

/// Sum of Euclidean edge lengths of the cycle.
inline double cycle_length(std::span<const Point> points, std::span<const int> order) {
    detail::require_cycle_input(points, order);
    const std::size_t n = order.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = points[order[i]];
        const Point b = points[order[(i + 1) % n]];
        const double dx = static_cast<double>(b.x - a.x);
        const double dy = static_cast<double>(b.y - a.y);
        total += std::sqrt(dx * dx + dy * dy);
    }
    return total;
}

}  // namespace polycycle
