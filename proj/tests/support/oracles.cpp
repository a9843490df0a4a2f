#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace curvechi::testing {

namespace {

struct Vec {
    double x, y;
};

double point_segment_distance(Vec p, Vec a, Vec b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double qx = a.x + t * dx - p.x, qy = a.y + t * dy - p.y;
    return std::sqrt(qx * qx + qy * qy);
}

Vec vec(Point p) { return Vec{double(p.x), double(p.y)}; }

}  // namespace

SegmentOracle sample_segments(Point a0, Point a1, Point b0, Point b1) {
    constexpr int kSamples = 2048;
    constexpr double kThreshold = 0.02;
    SegmentOracle out;
    double best = std::numeric_limits<double>::max();
    auto scan = [&](Vec s0, Vec s1, Vec o0, Vec o1) {
        double on_lo = 2, on_hi = -1;
        for (int k = 0; k <= kSamples; ++k) {
            const double t = double(k) / kSamples;
            const Vec p{s0.x + t * (s1.x - s0.x), s0.y + t * (s1.y - s0.y)};
            const double d = point_segment_distance(p, o0, o1);
            if (d < best) {
                best = d;
                out.x = p.x;
                out.y = p.y;
            }
            if (d < 1e-9) {
                on_lo = std::min(on_lo, t);
                on_hi = std::max(on_hi, t);
            }
        }
        const double len = std::hypot(s1.x - s0.x, s1.y - s0.y);
        if (on_hi >= on_lo && (on_hi - on_lo) * len > 0.5) out.overlap = true;
    };
    scan(vec(a0), vec(a1), vec(b0), vec(b1));
    scan(vec(b0), vec(b1), vec(a0), vec(a1));
    out.meet = best < kThreshold;
    return out;
}

CapRaster::CapRaster(const Polyline& cap, int per_unit) : per_unit_(per_unit) {
    for (std::size_t i = 0; i + 1 < cap.size(); ++i) walls_.emplace_back(cap.points()[i], cap.points()[i + 1]);
    walls_.emplace_back(cap.back(), cap.front());  // baseline foot segment

    x0_ = -8;
    y0_ = -2;
    w_ = 16 * per_unit_;
    h_ = 11 * per_unit_;
    std::vector<char> wall(std::size_t(w_) * h_, 0);
    const double cell = 1.0 / per_unit_;
    auto mark = [&](double x, double y) {
        const int cx = int(std::floor((x - x0_) / cell)), cy = int(std::floor((y - y0_) / cell));
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                const int nx = cx + dx, ny = cy + dy;
                if (nx >= 0 && ny >= 0 && nx < w_ && ny < h_) wall[std::size_t(ny) * w_ + nx] = 1;
            }
    };
    for (const auto& [a, b] : walls_) {
        const double len = std::hypot(double(b.x - a.x), double(b.y - a.y));
        const int steps = int(std::ceil(len / (cell / 4))) + 1;
        for (int k = 0; k <= steps; ++k) {
            const double t = double(k) / steps;
            mark(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
        }
    }
    reached_.assign(wall.size(), 0);
    std::deque<std::pair<int, int>> queue{{0, 0}};
    reached_[0] = 1;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        const int nb[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : nb) {
            const int nx = x + d[0], ny = y + d[1];
            if (nx < 0 || ny < 0 || nx >= w_ || ny >= h_) continue;
            const std::size_t idx = std::size_t(ny) * w_ + nx;
            if (wall[idx] || reached_[idx]) continue;
            reached_[idx] = 1;
            queue.emplace_back(nx, ny);
        }
    }
    for (std::size_t i = 0; i < wall.size(); ++i)
        if (wall[i]) reached_[i] = 2;
}

RasterRegion CapRaster::classify(Point p) const {
    for (const auto& [a, b] : walls_) {
        if (point_segment_distance(vec(p), vec(a), vec(b)) < 1e-9) return RasterRegion::On;
    }
    const double cell = 1.0 / per_unit_;
    const int cx = int(std::floor((p.x + 0.5 * cell - x0_) / cell)), cy = int(std::floor((p.y + 0.5 * cell - y0_) / cell));
    const char r = reached_.at(std::size_t(cy) * w_ + cx);
    if (r == 2) throw std::logic_error("raster query landed on a wall cell");
    return r == 1 ? RasterRegion::Exterior : RasterRegion::Interior;
}

std::vector<std::size_t> pixel_components(const std::vector<std::vector<Point>>& pieces) {
    Coord lo_x = std::numeric_limits<Coord>::max(), lo_y = lo_x, hi_x = std::numeric_limits<Coord>::min(), hi_y = hi_x;
    for (const auto& piece : pieces)
        for (const auto& p : piece) {
            lo_x = std::min(lo_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_x = std::max(hi_x, p.x);
            hi_y = std::max(hi_y, p.y);
        }
    const Coord w = 2 * (hi_x - lo_x) + 1, h = 2 * (hi_y - lo_y) + 1;
    std::vector<char> painted(std::size_t(w * h), 0);
    std::vector<std::size_t> seed(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& piece = pieces[i];
        seed[i] = std::size_t(2 * (piece[0].y - lo_y) * w + 2 * (piece[0].x - lo_x));
        for (std::size_t s = 0; s + 1 < piece.size(); ++s) {
            Coord x = 2 * (piece[s].x - lo_x), y = 2 * (piece[s].y - lo_y);
            const Coord tx = 2 * (piece[s + 1].x - lo_x), ty = 2 * (piece[s + 1].y - lo_y);
            if (x != tx && y != ty) throw std::logic_error("pixel oracle needs rectilinear pieces");
            const Coord sx = (tx > x) - (tx < x), sy = (ty > y) - (ty < y);
            while (true) {
                painted[std::size_t(y * w + x)] = 1;
                if (x == tx && y == ty) break;
                x += sx;
                y += sy;
            }
        }
    }
    std::vector<long> comp(painted.size(), -1);
    long next = 0;
    for (std::size_t start = 0; start < painted.size(); ++start) {
        if (!painted[start] || comp[start] >= 0) continue;
        std::deque<std::size_t> queue{start};
        comp[start] = next;
        while (!queue.empty()) {
            const std::size_t idx = queue.front();
            queue.pop_front();
            const Coord x = Coord(idx) % w, y = Coord(idx) / w;
            const Coord nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
            for (const auto& n : nb) {
                if (n[0] < 0 || n[1] < 0 || n[0] >= w || n[1] >= h) continue;
                const std::size_t j = std::size_t(n[1] * w + n[0]);
                if (!painted[j] || comp[j] >= 0) continue;
                comp[j] = next;
                queue.push_back(j);
            }
        }
        ++next;
    }
    std::vector<std::size_t> out(pieces.size());
    std::map<long, std::size_t> dense;
    for (std::size_t i = 0; i < pieces.size(); ++i) out[i] = dense.emplace(comp[seed[i]], dense.size()).first->second;
    return out;
}

int brute_force_chromatic(const IntersectionGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    std::function<bool(std::size_t, int)> fill = [&](std::size_t v, int k) {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && color[u] == c);
            if (!ok) continue;
            color[v] = c;
            if (fill(v + 1, k)) return true;
        }
        color[v] = -1;
        return false;
    };
    for (int k = 1;; ++k)
        if (fill(0, k)) return k;
}

int brute_force_clique(const IntersectionGraph& g) {
    const std::size_t n = g.size();
    if (n > 20) throw std::logic_error("brute-force clique is limited to 20 vertices");
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool clique = true;
        for (std::size_t u = 0; u < n && clique; ++u)
            for (std::size_t v = u + 1; v < n && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) clique = false;
        if (clique) best = size;
    }
    return best;
}

bool brute_force_triangle(const IntersectionGraph& g) {
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (g.adjacent(a, b))
                for (std::size_t c = b + 1; c < n; ++c)
                    if (g.adjacent(a, c) && g.adjacent(b, c)) return true;
    return false;
}

namespace {

Polyline lattice_polyline(const Subcurve& pts) {
    std::vector<Point> out;
    for (const auto& p : pts) out.push_back(p.to_point());
    return Polyline(std::move(out));
}

bool pieces_meet(const Member& a, Part pa, const Member& b, Part pb) {
    if (a.id() == b.id()) return pa == pb;
    return !segments_intersect(lattice_polyline(a.part_points(pa)), lattice_polyline(b.part_points(pb))).empty();
}

Rational foot(const Member& m, Part p) {
    for (const auto& q : m.part_points(p))
        if (q.y == 0) return q.x;
    throw std::logic_error("part without a basepoint");
}

}  // namespace

std::pair<int, std::size_t> reference_chain_check(const CurveFamily& f,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    for (std::size_t i = 1; i <= pairs.size(); ++i) {
        const Member& a = f[pairs[i - 1].first];
        const Member& b = f[pairs[i - 1].second];
        if (!pieces_meet(a, Part::R, b, Part::L)) return {1, i};
        if (i == 1) continue;
        const Member& pa = f[pairs[i - 2].first];
        const Member& pb = f[pairs[i - 2].second];
        Rational u = foot(pa, Part::R), v = foot(pb, Part::L);
        if (v < u) std::swap(u, v);
        const Rational ra = foot(a, Part::R), lb = foot(b, Part::L);
        if (!(u < ra && ra < v && u < lb && lb < v)) return {2, i};
        bool left_ok = true, right_ok = true;
        for (std::size_t j = 1; j < i; ++j) {
            if (!pieces_meet(a, Part::L, f[pairs[j - 1].first], Part::R)) left_ok = false;
            if (!pieces_meet(b, Part::R, f[pairs[j - 1].second], Part::L)) right_ok = false;
        }
        if (!left_ok && !right_ok) return {3, i};
    }
    return {0, 0};
}

}  // namespace curvechi::testing
