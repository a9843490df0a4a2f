#include "curvechi/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvechi {

namespace {

Wide cross(Wide ux, Wide uy, Wide vx, Wide vy) { return ux * vy - uy * vx; }

Wide cross3(const Point& o, const Point& a, const Point& b) {
    return cross(Wide(a.x) - o.x, Wide(a.y) - o.y, Wide(b.x) - o.x, Wide(b.y) - o.y);
}

int sign(Wide v) { return (v > 0) - (v < 0); }
int sign(Coord v) { return (v > 0) - (v < 0); }

void check_coordinate(Coord v) {
    if (v > kMaxCoordinate || v < -kMaxCoordinate) {
        throw CoordinateRangeError("coordinate " + std::to_string(v) + " outside the supported range");
    }
}

bool boxes_overlap(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
    return std::max(a0.x, a1.x) >= std::min(b0.x, b1.x) && std::max(b0.x, b1.x) >= std::min(a0.x, a1.x) &&
           std::max(a0.y, a1.y) >= std::min(b0.y, b1.y) && std::max(b0.y, b1.y) >= std::min(a0.y, a1.y);
}

struct SegmentHit {
    ExactPoint point;
    Rational ta;
    Rational tb;
};

ExactPoint lerp(const Point& a0, const Point& a1, const Rational& t) {
    return ExactPoint(Rational(a0.x) + t * to_rational(Wide(a1.x) - a0.x),
                      Rational(a0.y) + t * to_rational(Wide(a1.y) - a0.y));
}

// Parameter of a point known to lie on the line through s0, s1.
Rational param_on(const Point& s0, const Point& s1, const ExactPoint& p) {
    const Wide dx = Wide(s1.x) - s0.x;
    const Wide dy = Wide(s1.y) - s0.y;
    if (dx != 0) return (p.x - Rational(s0.x)) / to_rational(dx);
    return (p.y - Rational(s0.y)) / to_rational(dy);
}

std::optional<SegmentHit> intersect_segments(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
    if (!boxes_overlap(a0, a1, b0, b1)) return std::nullopt;
    const int d1 = sign(cross3(b0, b1, a0));
    const int d2 = sign(cross3(b0, b1, a1));
    const int d3 = sign(cross3(a0, a1, b0));
    const int d4 = sign(cross3(a0, a1, b1));

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        const Wide rx = Wide(a1.x) - a0.x;
        const Wide ry = Wide(a1.y) - a0.y;
        const Rational len2 = to_rational(rx * rx + ry * ry);
        auto proj = [&](const Point& q) {
            return to_rational((Wide(q.x) - a0.x) * rx + (Wide(q.y) - a0.y) * ry) / len2;
        };
        const Rational t0 = proj(b0);
        const Rational t1 = proj(b1);
        const Rational lo = std::max(Rational(0), std::min(t0, t1));
        const Rational hi = std::min(Rational(1), std::max(t0, t1));
        if (lo > hi) return std::nullopt;
        if (lo < hi) {
            std::ostringstream os;
            os << "segments (" << a0.x << "," << a0.y << ")-(" << a1.x << "," << a1.y << ") and (" << b0.x << ","
               << b0.y << ")-(" << b1.x << "," << b1.y << ") overlap";
            throw OverlapError(os.str());
        }
        ExactPoint p = lerp(a0, a1, lo);
        Rational tb = param_on(b0, b1, p);
        return SegmentHit{std::move(p), lo, std::move(tb)};
    }
    if (d1 * d2 > 0 || d3 * d4 > 0) return std::nullopt;

    const Wide rax = Wide(a1.x) - a0.x, ray = Wide(a1.y) - a0.y;
    const Wide rbx = Wide(b1.x) - b0.x, rby = Wide(b1.y) - b0.y;
    const Wide wx = Wide(b0.x) - a0.x, wy = Wide(b0.y) - a0.y;
    const Rational denom = to_rational(cross(rax, ray, rbx, rby));
    Rational ta = to_rational(cross(wx, wy, rbx, rby)) / denom;
    Rational tb = to_rational(cross(wx, wy, rax, ray)) / denom;
    ExactPoint p(Rational(a0.x) + ta * to_rational(rax), Rational(a0.y) + ta * to_rational(ray));
    return SegmentHit{std::move(p), std::move(ta), std::move(tb)};
}

}  // namespace

Rational to_rational(Wide v) { return Rational(BigInt(v)); }

bool ExactPoint::is_lattice() const {
    return boost::multiprecision::denominator(x) == 1 && boost::multiprecision::denominator(y) == 1;
}

Point ExactPoint::to_point() const {
    return Point{boost::multiprecision::numerator(x).convert_to<Coord>(),
                 boost::multiprecision::numerator(y).convert_to<Coord>()};
}

double ExactPoint::approx_x() const { return x.convert_to<double>(); }
double ExactPoint::approx_y() const { return y.convert_to<double>(); }

std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string to_string(const ExactPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

int orientation(const Point& a, const Point& b, const Point& c) { return sign(cross3(a, b, c)); }

Polyline::Polyline(std::vector<Point> points, std::string id) : points_(std::move(points)), id_(std::move(id)) {
    if (points_.size() < 2) throw GeometryError("polyline " + id_ + " needs at least two points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        check_coordinate(points_[i].x);
        check_coordinate(points_[i].y);
        if (i > 0 && points_[i] == points_[i - 1]) {
            throw GeometryError("polyline " + id_ + " repeats vertex " + std::to_string(i));
        }
    }
}

CurvePos Polyline::vertex_pos(std::size_t vertex) const {
    if (vertex + 1 < points_.size()) return CurvePos{vertex, Rational(0)};
    return CurvePos{segment_count() - 1, Rational(1)};
}

CurvePos Polyline::normalize(std::size_t segment, Rational t) const {
    if (t == 1 && segment + 1 < segment_count()) return CurvePos{segment + 1, Rational(0)};
    return CurvePos{segment, std::move(t)};
}

ExactPoint Polyline::at(const CurvePos& pos) const {
    return lerp(points_[pos.segment], points_[pos.segment + 1], pos.t);
}

Polyline Polyline::reversed() const {
    std::vector<Point> pts(points_.rbegin(), points_.rend());
    return Polyline(std::move(pts), id_);
}

Polyline Polyline::scaled(Coord factor) const {
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) {
        const Wide x = Wide(p.x) * factor;
        const Wide y = Wide(p.y) * factor;
        if (x > kMaxCoordinate || x < -kMaxCoordinate || y > kMaxCoordinate || y < -kMaxCoordinate) {
            throw CoordinateRangeError("scaling polyline " + id_ + " overflows the coordinate range");
        }
        pts.push_back(Point{Coord(x), Coord(y)});
    }
    return Polyline(std::move(pts), id_);
}

std::pair<Point, Point> Polyline::bounds() const {
    Point lo = points_.front(), hi = points_.front();
    for (const auto& p : points_) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const Polyline& c) {
    const auto& pts = c.points();
    const std::size_t m = c.segment_count();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto xmin = [&](std::size_t s) { return std::min(pts[s].x, pts[s + 1].x); };
    auto xmax = [&](std::size_t s) { return std::max(pts[s].x, pts[s + 1].x); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xmin(a) < xmin(b); });

    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < m && xmin(order[oj]) <= xmax(i); ++oj) {
            std::size_t a = i, b = order[oj];
            if (a > b) std::swap(a, b);
            if (b == a + 1) {
                // Adjacent segments share pts[b]; they only fail by folding back.
                const Point& p = pts[a];
                const Point& q = pts[b];
                const Point& r = pts[b + 1];
                if (orientation(p, q, r) == 0) {
                    const Wide dot = (Wide(q.x) - p.x) * (Wide(r.x) - q.x) + (Wide(q.y) - p.y) * (Wide(r.y) - q.y);
                    if (dot < 0) return std::make_pair(a, b);
                }
                continue;
            }
            try {
                if (intersect_segments(pts[a], pts[a + 1], pts[b], pts[b + 1])) return std::make_pair(a, b);
            } catch (const OverlapError&) {
                return std::make_pair(a, b);
            }
        }
    }
    return std::nullopt;
}

void require_simple(const Polyline& c) {
    if (auto hit = find_self_intersection(c)) {
        throw NotSimpleError("polyline " + c.id() + " is not simple: segments " + std::to_string(hit->first) +
                             " and " + std::to_string(hit->second) + " meet");
    }
}

std::vector<Crossing> polyline_crossings(const Polyline& a, const Polyline& b) {
    std::vector<Crossing> out;
    const auto [alo, ahi] = a.bounds();
    const auto [blo, bhi] = b.bounds();
    if (!boxes_overlap(alo, ahi, blo, bhi)) return out;

    const auto& pa = a.points();
    const auto& pb = b.points();
    for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
        if (!boxes_overlap(pa[i], pa[i + 1], blo, bhi)) continue;
        for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
            auto hit = intersect_segments(pa[i], pa[i + 1], pb[j], pb[j + 1]);
            if (!hit) continue;
            out.push_back(Crossing{std::move(hit->point), a.normalize(i, std::move(hit->ta)),
                                   b.normalize(j, std::move(hit->tb))});
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.point < y.point; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Crossing& x, const Crossing& y) { return x.point == y.point; }),
              out.end());
    return out;
}

std::vector<ExactPoint> segments_intersect(const Polyline& a, const Polyline& b) {
    std::vector<ExactPoint> pts;
    for (auto& c : polyline_crossings(a, b)) pts.push_back(std::move(c.point));
    return pts;
}

std::vector<Basepoint> baseline_crossings_along(const Polyline& c) {
    const auto& pts = c.points();
    const std::size_t n = pts.size();
    std::vector<Basepoint> out;
    const bool first_on = pts.front().y == 0;
    const bool last_on = pts.back().y == 0;

    if (first_on && last_on) {
        throw GeometryError("curve " + c.id() + " has both endpoints on the baseline");
    }
    if (first_on || last_on) {
        const std::size_t foot = first_on ? 0 : n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != foot && pts[i].y <= 0) {
                throw GeometryError("1-curve " + c.id() + " leaves the open upper half-plane at vertex " +
                                    std::to_string(i));
            }
        }
        out.push_back(Basepoint{Rational(pts[foot].x), c.vertex_pos(foot), true});
        return out;
    }
    if (pts.front().y < 0 || pts.back().y < 0) {
        throw GeometryError("curve " + c.id() + " has an endpoint below the baseline");
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pts[i].y == 0 && pts[i + 1].y == 0) {
            throw CollinearError("curve " + c.id() + " runs along the baseline on segment " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i > 0 && pts[i].y == 0) {
            if (sign(pts[i - 1].y) == sign(pts[i + 1].y)) {
                throw TangencyError("curve " + c.id() + " touches the baseline without crossing at vertex " +
                                    std::to_string(i));
            }
            out.push_back(Basepoint{Rational(pts[i].x), c.vertex_pos(i), true});
        }
        const Coord y0 = pts[i].y, y1 = pts[i + 1].y;
        if ((y0 < 0 && y1 > 0) || (y0 > 0 && y1 < 0)) {
            Rational t = Rational(-y0) / Rational(Wide(y1) - y0);
            Rational x = Rational(pts[i].x) + t * to_rational(Wide(pts[i + 1].x) - pts[i].x);
            out.push_back(Basepoint{std::move(x), CurvePos{i, std::move(t)}, false});
        }
    }
    return out;
}

std::vector<Basepoint> baseline_crossings(const Polyline& c) {
    auto out = baseline_crossings_along(c);
    std::sort(out.begin(), out.end(), [](const Basepoint& a, const Basepoint& b) { return a.x < b.x; });
    return out;
}

bool precedes(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.empty() || b.empty()) return false;
    const Rational& amax = *std::max_element(a.begin(), a.end());
    const Rational& bmin = *std::min_element(b.begin(), b.end());
    return amax < bmin;
}

CapCurve::CapCurve(Polyline polyline) : polyline_(std::move(polyline)) {
    const auto& pts = polyline_.points();
    if (pts.front().y != 0 || pts.back().y != 0) {
        throw GeometryError("cap-curve " + polyline_.id() + " must have both endpoints on the baseline");
    }
    if (pts.front().x == pts.back().x) {
        throw GeometryError("cap-curve " + polyline_.id() + " has coincident feet");
    }
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (pts[i].y <= 0) {
            throw GeometryError("cap-curve " + polyline_.id() + " leaves the open upper half-plane at vertex " +
                                std::to_string(i));
        }
    }
    require_simple(polyline_);
}

Coord CapCurve::left_foot() const { return std::min(polyline_.front().x, polyline_.back().x); }
Coord CapCurve::right_foot() const { return std::max(polyline_.front().x, polyline_.back().x); }

const char* to_string(Region r) {
    switch (r) {
        case Region::Interior: return "INT";
        case Region::Exterior: return "EXT";
        case Region::On: return "ON";
    }
    return "?";
}

Region region_of(const CapCurve& cap, const Point& p) {
    const auto& pts = cap.polyline().points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point& u = pts[i];
        const Point& v = pts[i + 1];
        if (orientation(u, v, p) == 0 && p.x >= std::min(u.x, v.x) && p.x <= std::max(u.x, v.x) &&
            p.y >= std::min(u.y, v.y) && p.y <= std::max(u.y, v.y)) {
            return Region::On;
        }
    }
    if (p.y == 0 && p.x >= cap.left_foot() && p.x <= cap.right_foot()) return Region::On;

    // Rightward ray parity; the closing baseline edge is horizontal and never
    // counted under the half-open rule.
    bool inside = false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point& u = pts[i];
        const Point& v = pts[i + 1];
        if ((u.y > p.y) == (v.y > p.y)) continue;
        const Wide dy = Wide(v.y) - u.y;
        const Wide lhs = (Wide(p.x) - u.x) * dy;
        const Wide rhs = (Wide(p.y) - u.y) * (Wide(v.x) - u.x);
        if (dy > 0 ? rhs > lhs : rhs < lhs) inside = !inside;
    }
    return inside ? Region::Interior : Region::Exterior;
}

}  // namespace curvechi
