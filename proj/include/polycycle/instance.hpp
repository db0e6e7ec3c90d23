#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polycycle/errors.hpp"
#include "polycycle/geometry.hpp"
#include "polycycle/rng.hpp"

namespace polycycle {

/// A problem instance: a simple CCW polygon and n >= 3 pairwise-distinct
/// points strictly inside it.
struct Instance {
    Polygon polygon;
    std::vector<Point> points;
    std::string name;

    int n() const { return static_cast<int>(points.size()); }
    int m() const { return static_cast<int>(polygon.vertices.size()); }
};

/// Parameters for random instance generation. Coordinates are drawn from the
/// square [-box, box]^2.
struct GenSpec {
    int sides = 10;
    int points = 10;
    Coord box = 500;
    std::uint64_t seed = 0;
};

/// Checks every Instance invariant and returns one human-readable violation
/// per failure; an empty list means the instance is valid.
inline std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> issues;
    const auto& v = inst.polygon.vertices;
    const std::size_t m = v.size();

    if (m < 3) {
        issues.push_back("polygon has fewer than 3 vertices");
        return issues;
    }
    bool structure_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (!coords_in_range(v[i])) {
            issues.push_back("polygon vertex " + std::to_string(i) + " is out of coordinate range");
            structure_ok = false;
        }
        if (v[i] == v[(i + 1) % m]) {
            issues.push_back("polygon vertices " + std::to_string(i) + " and " +
                             std::to_string((i + 1) % m) + " coincide");
            structure_ok = false;
        }
    }
    if (structure_ok) {
        if (!polygon_is_simple(inst.polygon))
            issues.push_back("polygon is not simple");
        else if (polygon_signed_area_doubled(inst.polygon) <= 0)
            issues.push_back("polygon is not counter-clockwise");
    }

    const std::size_t n = inst.points.size();
    if (n < 3) issues.push_back("instance has fewer than 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!coords_in_range(inst.points[i])) {
            issues.push_back("point " + std::to_string(i) + " is out of coordinate range");
            continue;
        }
        if (structure_ok && m >= 3) {
            switch (point_in_polygon(inst.points[i], inst.polygon)) {
                case Location::Inside: break;
                case Location::Boundary:
                    issues.push_back("point " + std::to_string(i) + " lies on the polygon boundary");
                    break;
                case Location::Outside:
                    issues.push_back("point " + std::to_string(i) + " lies outside the polygon");
                    break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (inst.points[i] == inst.points[j])
                issues.push_back("points " + std::to_string(i) + " and " + std::to_string(j) +
                                 " coincide");
    return issues;
}

/// Generates a simple polygon with exactly spec.sides vertices inside the
/// box, CCW oriented. Vertices sit at jittered-but-ordered angles around the
/// origin with radii drawn from [box/2, 0.98*box]: a random star polygon.
/// The bounded radius ratio and the minimum angular gap keep the shape free
/// of needle pockets, so interior point sets stay routable. Deterministic
/// per seed.
inline Polygon generate_polygon(const GenSpec& spec) {
    if (spec.sides < 3) throw ConfigError("generate_polygon: need at least 3 sides");
    if (spec.box < 10 || spec.box > kCoordLimit)
        throw ConfigError("generate_polygon: box half-width must be in [10, 1000000]");
    Rng rng(seed_combine(spec.seed, 0x706f6c79ULL));
    const int m = spec.sides;
    constexpr int kMaxAttempts = 10'000;
    constexpr double kTau = 6.283185307179586;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Polygon poly;
        poly.vertices.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            // jitter of +-0.3 slots keeps consecutive angles at least 0.4
            // slots apart; angles stay sorted, so the ring is CCW already
            const double angle = (static_cast<double>(k) + 0.3 * (2.0 * rng.unit() - 1.0)) *
                                 kTau / static_cast<double>(m);
            const double radius = static_cast<double>(spec.box) * (0.65 + 0.33 * rng.unit());
            poly.vertices.push_back(Point{static_cast<Coord>(std::llround(radius * std::cos(angle))),
                                          static_cast<Coord>(std::llround(radius * std::sin(angle)))});
        }
        if (!polygon_is_simple(poly)) continue;  // rounding collisions at small boxes
        if (polygon_signed_area_doubled(poly) < 0)
            std::reverse(poly.vertices.begin(), poly.vertices.end());
        return poly;
    }
    throw GenerationError("generate_polygon: retry budget exhausted (" +
                          std::to_string(kMaxAttempts) + " attempts)");
}

/// Samples n pairwise-distinct grid points strictly inside the polygon by
/// rejection over its bounding box. Deterministic per seed.
inline std::vector<Point> generate_points(const Polygon& poly, int n, std::uint64_t seed) {
    if (n < 3) throw ConfigError("generate_points: need at least 3 points");
    detail::require_polygon_sides(poly);
    Coord min_x = poly.vertices[0].x, max_x = min_x;
    Coord min_y = poly.vertices[0].y, max_y = min_y;
    for (const Point& v : poly.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    Rng rng(seed_combine(seed, 0x707473ULL));
    const std::uint64_t width = static_cast<std::uint64_t>(max_x - min_x) + 1;
    const std::uint64_t height = static_cast<std::uint64_t>(max_y - min_y) + 1;

    std::vector<Point> out;
    std::set<std::pair<Coord, Coord>> used;
    long long budget = 200'000 + 2'000LL * n;
    while (static_cast<int>(out.size()) < n && budget-- > 0) {
        const Point p{min_x + static_cast<Coord>(rng.below(width)),
                      min_y + static_cast<Coord>(rng.below(height))};
        if (point_in_polygon(p, poly) != Location::Inside) continue;
        if (used.insert({p.x, p.y}).second) out.push_back(p);
    }
    if (static_cast<int>(out.size()) < n)
        throw GenerationError("generate_points: sampling budget exhausted; polygon interior too "
                              "small for " + std::to_string(n) + " distinct grid points");
    return out;
}

/// Polygon plus interior points from one spec; sub-seeds are derived so the
/// whole instance is a pure function of the spec.
inline Instance generate_instance(const GenSpec& spec) {
    Instance inst;
    inst.polygon = generate_polygon(spec);
    inst.points = generate_points(inst.polygon, spec.points, seed_combine(spec.seed, 0x78ULL));
    return inst;
}

namespace detail {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next content line, with blank lines and '#' comments skipped.
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            const auto first = out.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (out[first] == '#') continue;
            return true;
        }
        return false;
    }
};

inline long long parse_count_line(LineReader& lr, const std::string& keyword) {
    std::string line;
    if (!lr.next(line))
        throw FormatError(lr.line_no + 1, "expected '" + keyword + " <count>', got end of input");
    std::istringstream iss(line);
    std::string tag;
    long long count = 0;
    std::string extra;
    if (!(iss >> tag >> count) || tag != keyword || (iss >> extra))
        throw FormatError(lr.line_no, "expected '" + keyword + " <count>'");
    if (count < 3)
        throw FormatError(lr.line_no, keyword + " count must be at least 3");
    return count;
}

inline Point parse_point_line(LineReader& lr, const std::string& what) {
    std::string line;
    if (!lr.next(line))
        throw FormatError(lr.line_no + 1, "unexpected end of input while reading " + what);
    std::istringstream iss(line);
    long long x = 0, y = 0;
    std::string extra;
    if (!(iss >> x >> y) || (iss >> extra))
        throw FormatError(lr.line_no, "expected two integers for " + what);
    return Point{x, y};
}

}  // namespace detail

/// Parses the canonical instance format and validates the result; throws
/// FormatError on syntax problems and ValidationError on invariant failures.
inline Instance read_instance(std::istream& in) {
    detail::LineReader lr{in};
    Instance inst;

    const long long m = detail::parse_count_line(lr, "POLYGON");
    inst.polygon.vertices.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i)
        inst.polygon.vertices.push_back(detail::parse_point_line(lr, "polygon vertex"));

    const long long n = detail::parse_count_line(lr, "POINTS");
    inst.points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        inst.points.push_back(detail::parse_point_line(lr, "point"));

    std::string trailing;
    if (lr.next(trailing)) throw FormatError(lr.line_no, "unexpected trailing content");

    const auto issues = validate(inst);
    if (!issues.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& issue : issues) msg += "\n  - " + issue;
        throw ValidationError(msg);
    }
    return inst;
}

/// Canonical text form; read_instance(write_instance(x)) is the identity and
/// the bytes are stable across platforms.
inline void write_instance(const Instance& inst, std::ostream& out) {
    out << "POLYGON " << inst.polygon.vertices.size() << "\n";
    for (const Point& v : inst.polygon.vertices) out << v.x << " " << v.y << "\n";
    out << "POINTS " << inst.points.size() << "\n";
    for (const Point& p : inst.points) out << p.x << " " << p.y << "\n";
}

}  // namespace polycycle
