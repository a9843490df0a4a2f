#include "generators.hpp"

#include <algorithm>
#include <set>

namespace curvechi::testing {

namespace {

Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }

std::vector<Coord> draw_distinct(Rng& rng, std::set<Coord>& used, std::size_t count, Coord span) {
    std::vector<Coord> out;
    for (int guard = 0; out.size() < count && guard < 1000; ++guard) {
        const Coord x = uniform(rng, 0, span - 1);
        if (used.count(x) || std::find(out.begin(), out.end(), x) != out.end()) continue;
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Increasing basepoints starting anywhere in [0, span) with consecutive gaps
// of at most max_gap; empty if one of them is already taken.
std::vector<Coord> draw_clustered(Rng& rng, const std::set<Coord>& used, std::size_t count, Coord span,
                                  Coord max_gap) {
    std::vector<Coord> out{uniform(rng, 0, span - 1)};
    while (out.size() < count) out.push_back(out.back() + uniform(rng, 1, max_gap));
    for (Coord x : out)
        if (used.count(x)) return {};
    return out;
}

EvenShape random_shape(Rng& rng, std::vector<Coord> bps, Coord max_height, Coord max_arm) {
    EvenShape s;
    s.basepoints = std::move(bps);
    // Tall L stems and low R arms make L-R crossings far likelier than
    // crossings of two L or two R pieces.
    const Coord half = std::max<Coord>(1, max_height / 2);
    s.left_height = uniform(rng, std::min(half + 1, max_height), max_height);
    s.right_height = uniform(rng, 1, half);
    s.left_arm = uniform(rng, -max_arm / 4, max_arm / 4);
    s.right_arm = uniform(rng, -max_arm, max_arm);
    for (std::size_t g = 0; g + 1 < s.basepoints.size(); ++g) {
        if (g % 2 == 0) {
            // Depth equal to the gap width keeps dips over nested gaps disjoint.
            s.dips.push_back(s.basepoints[g + 1] - s.basepoints[g]);
        } else {
            s.humps.push_back(uniform(rng, 1, 3));
        }
    }
    s.reversed = uniform(rng, 0, 1) == 1;
    return s;
}

bool compatible(const Member& cand, const std::vector<Member>& members, const FamilyParams& p) {
    if (p.laminar) {
        const Interval a = cand.interval();
        for (const auto& m : members) {
            const Interval b = m.interval();
            if (!(a.disjoint(b) || a.contains(b) || b.contains(a))) return false;
        }
    }
    for (const auto& m : members) {
        for (const auto& inc : incidences(cand, m)) {
            const bool lr = (inc.part_a == Part::L && inc.part_b == Part::R) ||
                            (inc.part_a == Part::R && inc.part_b == Part::L);
            if (p.require_lr && !lr) return false;
            if (p.forbid_below && inc.point.y < 0) return false;
        }
    }
    return true;
}

}  // namespace

Polyline build_even_curve(const EvenShape& s, const std::string& id) {
    const auto& x = s.basepoints;
    std::vector<Point> pts;
    if (s.left_arm != 0) pts.push_back(Point{x.front() + s.left_arm, s.left_height});
    pts.push_back(Point{x.front(), s.left_height});
    pts.push_back(Point{x.front(), 0});
    std::size_t dip = 0, hump = 0;
    for (std::size_t g = 0; g + 1 < x.size(); ++g) {
        const Coord y = g % 2 == 0 ? -s.dips[dip++] : s.humps[hump++];
        pts.push_back(Point{x[g], y});
        pts.push_back(Point{x[g + 1], y});
        pts.push_back(Point{x[g + 1], 0});
    }
    pts.push_back(Point{x.back(), s.right_height});
    if (s.right_arm != 0) pts.push_back(Point{x.back() + s.right_arm, s.right_height});
    if (s.reversed) std::reverse(pts.begin(), pts.end());
    return Polyline(std::move(pts), id);
}

CurveFamily random_family(Rng& rng, const FamilyParams& p) {
    std::vector<Member> members;
    std::set<Coord> used;
    for (int i = 0; i < p.members; ++i) {
        for (int attempt = 0; attempt < p.attempts; ++attempt) {
            auto bps = p.max_gap > 0 ? draw_clustered(rng, used, 2 * std::size_t(p.t), p.span, p.max_gap)
                                     : draw_distinct(rng, used, 2 * std::size_t(p.t), p.span);
            if (bps.size() != 2 * std::size_t(p.t)) continue;
            try {
                Member cand = Member::even(build_even_curve(random_shape(rng, bps, p.max_height, p.max_arm),
                                                            "c" + std::to_string(i)));
                if (!compatible(cand, members, p)) continue;
                members.push_back(std::move(cand));
                used.insert(bps.begin(), bps.end());
                break;
            } catch (const Error&) {
                continue;
            }
        }
    }
    if (p.require_lr) return CurveFamily(FamilyKind::LR, std::move(members));
    return CurveFamily(FamilyKind::TwoT, std::move(members), 1, p.t);
}

CurveFamily random_common_point_family(Rng& rng, int n) {
    // Member i (0 outermost) has basepoints l_i < ... < l_{n-1} < 0 < r_{n-1} < ... < r_i,
    // a dip of depth n - i, an L stem at an odd height and an R arm at height
    // 2(n - i) reaching left; inner R stems are lower, so an arm can only meet
    // L stems.
    std::vector<Coord> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    Coord x = 0;
    for (int i = n - 1; i >= 0; --i) {
        x -= 2 * uniform(rng, 1, 3);
        left[std::size_t(i)] = x;
    }
    x = 0;
    for (int i = n - 1; i >= 0; --i) {
        x += 2 * uniform(rng, 1, 3);
        right[std::size_t(i)] = x;
    }
    const Coord lo = left.empty() ? 0 : left[0];
    std::vector<Member> members;
    for (int i = 0; i < n; ++i) {
        const std::size_t k = std::size_t(i);
        const Coord arm_height = 2 * Coord(n - i);
        const Coord end = 2 * uniform(rng, lo / 2 - 1, right[k] / 2 - 1) + 1;
        const Coord left_height = end < left[k] ? 2 * uniform(rng, 0, arm_height / 2 - 1) + 1
                                                : 2 * uniform(rng, 0, Coord(n)) + 1;
        std::vector<Point> pts{{left[k], left_height},
                               {left[k], -Coord(n - i)},
                               {right[k], -Coord(n - i)},
                               {right[k], arm_height},
                               {end, arm_height}};
        members.push_back(Member::even(Polyline(std::move(pts), "c" + std::to_string(i))));
    }
    return CurveFamily(FamilyKind::LR2, std::move(members));
}

Polyline random_cap_curve(Rng& rng, Coord range) {
    const Coord left = -uniform(rng, 1, range), right = uniform(rng, 1, range);
    std::vector<Point> inner;
    const int count = int(uniform(rng, 1, 6));
    for (int guard = 0; int(inner.size()) < count && guard < 200; ++guard) {
        const Point p{uniform(rng, -range, range), uniform(rng, 1, range)};
        bool clash = false;
        for (const auto& q : inner) clash = clash || Wide(p.x) * q.y == Wide(q.x) * p.y;
        if (!clash) inner.push_back(p);
    }
    // Increasing angle around the origin, starting from the right foot.
    std::sort(inner.begin(), inner.end(), [](const Point& a, const Point& b) {
        return Wide(a.x) * b.y - Wide(a.y) * b.x > 0;
    });
    std::vector<Point> pts{Point{right, 0}};
    pts.insert(pts.end(), inner.begin(), inner.end());
    pts.push_back(Point{left, 0});
    return Polyline(std::move(pts), "cap");
}

IntersectionGraph random_graph(Rng& rng, std::size_t n, double p) {
    IntersectionGraph g(n);
    std::bernoulli_distribution edge(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace curvechi::testing
