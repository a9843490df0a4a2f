#pragma once

// Exact planar primitives over fixed-point integer coordinates. The baseline
// is the line y = 0. Orientation tests run in 128-bit integers; any point
// that is not a lattice point (edge/edge intersections, edge-interior
// baseline crossings) is carried as an exact rational.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curvechi/errors.hpp"

namespace curvechi {

using Coord = std::int64_t;
using Wide = __int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coordinates must stay strictly inside (-2^62, 2^62) so that every
// orientation determinant fits in a signed 128-bit integer.
inline constexpr Coord kMaxCoordinate = (Coord{1} << 62) - 1;

struct Point {
    Coord x = 0;
    Coord y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

Rational to_rational(Wide v);

struct ExactPoint {
    Rational x;
    Rational y;

    ExactPoint() = default;
    ExactPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    explicit ExactPoint(const Point& p) : x(p.x), y(p.y) {}

    bool is_lattice() const;
    // Only valid when is_lattice().
    Point to_point() const;
    double approx_x() const;
    double approx_y() const;

    friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const ExactPoint& a, const ExactPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

std::string to_string(const Rational& r);
std::string to_string(const ExactPoint& p);

// Sign of the cross product (b - a) x (c - a): +1 counter-clockwise, -1
// clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// A location along a polyline: segment index plus parameter t in [0, 1].
// Always normalized so that a shared vertex has a single representation
// (t == 1 only on the final segment).
struct CurvePos {
    std::size_t segment = 0;
    Rational t;

    friend bool operator==(const CurvePos&, const CurvePos&) = default;
    friend bool operator<(const CurvePos& a, const CurvePos& b) {
        if (a.segment != b.segment) return a.segment < b.segment;
        return a.t < b.t;
    }
    friend bool operator<=(const CurvePos& a, const CurvePos& b) { return !(b < a); }
};

class Polyline {
public:
    Polyline() = default;
    Polyline(std::vector<Point> points, std::string id = {});

    const std::vector<Point>& points() const noexcept { return points_; }
    const std::string& id() const noexcept { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t segment_count() const noexcept { return points_.size() - 1; }
    const Point& front() const { return points_.front(); }
    const Point& back() const { return points_.back(); }

    CurvePos vertex_pos(std::size_t vertex) const;
    CurvePos normalize(std::size_t segment, Rational t) const;
    ExactPoint at(const CurvePos& pos) const;

    Polyline reversed() const;
    Polyline scaled(Coord factor) const;

    // Bounding box as {min, max}.
    std::pair<Point, Point> bounds() const;

private:
    std::vector<Point> points_;
    std::string id_;
};

// First pair of non-adjacent segments that meet (or adjacent segments that
// fold back over each other); nullopt when the polyline is simple.
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const Polyline& c);
void require_simple(const Polyline& c);

// A common point of two polylines together with its location on each.
struct Crossing {
    ExactPoint point;
    CurvePos on_a;
    CurvePos on_b;
};

// Every common point of two polylines, each reported once, ordered by point.
// Throws OverlapError if the polylines share a piece of positive length.
std::vector<Crossing> polyline_crossings(const Polyline& a, const Polyline& b);

// Point-set form of polyline_crossings.
std::vector<ExactPoint> segments_intersect(const Polyline& a, const Polyline& b);

struct Basepoint {
    Rational x;
    CurvePos pos;
    bool at_vertex = false;

    ExactPoint point() const { return ExactPoint(x, Rational(0)); }
};

// Baseline points of a curve, left to right. Accepts curves whose endpoints
// are strictly above the baseline (every baseline point must be a proper
// crossing) and 1-curves (one endpoint on the baseline, the rest strictly
// above).
std::vector<Basepoint> baseline_crossings(const Polyline& c);

// Basepoints of a curve in the order they are met walking along it.
std::vector<Basepoint> baseline_crossings_along(const Polyline& c);

// a ≺ b: every basepoint of a strictly left of every basepoint of b.
bool precedes(std::span<const Rational> a, std::span<const Rational> b);

// Curve in the closed upper half-plane with both endpoints on the baseline
// and every other point strictly above it.
class CapCurve {
public:
    explicit CapCurve(Polyline polyline);
    const Polyline& polyline() const noexcept { return polyline_; }
    Coord left_foot() const;
    Coord right_foot() const;

private:
    Polyline polyline_;
};

enum class Region { Interior, Exterior, On };
const char* to_string(Region r);

// Classifies p against the closed region bounded by the cap-curve and the
// baseline segment between its feet.
Region region_of(const CapCurve& cap, const Point& p);

}  // namespace curvechi
