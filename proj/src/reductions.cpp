#include "curvechi/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace curvechi {

namespace {

std::int64_t checked_product(std::int64_t a, std::int64_t b, const char* what) {
    const Wide p = Wide(a) * b;
    if (p > kMaxCoordinate || p < -kMaxCoordinate) throw ScaleOverflow(std::string(what) + " overflows 2^62");
    return std::int64_t(p);
}

Member scaled_member(const Member& m, std::int64_t factor) {
    Member out = [&] {
        switch (m.shape()) {
            case MemberShape::OneCurve: return Member::one_curve(m.strands()[0].scaled(factor));
            case MemberShape::Even: return Member::even(m.strands()[0].scaled(factor));
            case MemberShape::Double:
                return Member::double_curve(m.id(), m.strands()[0].scaled(factor), m.strands()[1].scaled(factor));
        }
        throw std::logic_error("unknown member shape");
    }();
    out.set_level(m.level());
    return out;
}

CurveFamily scaled_family(const CurveFamily& f, std::int64_t factor) {
    if (factor == 1) return f;
    std::vector<Member> ms;
    ms.reserve(f.size());
    for (const auto& m : f.members()) ms.push_back(scaled_member(m, factor));
    return CurveFamily(f.kind(), std::move(ms), checked_product(f.scale(), factor, "family scale"), f.t());
}

// Vertices from the start of c up to a lattice position.
std::vector<Point> prefix_points(const Polyline& c, const CurvePos& pos) {
    std::vector<Point> out(c.points().begin(), c.points().begin() + std::ptrdiff_t(pos.segment) + 1);
    if (pos.t != 0) out.push_back(c.at(pos).to_point());
    return out;
}

// Vertices from a lattice position to the end of c.
std::vector<Point> suffix_points(const Polyline& c, const CurvePos& pos) {
    std::vector<Point> out{c.at(pos).to_point()};
    out.insert(out.end(), c.points().begin() + std::ptrdiff_t(pos.segment) + 1, c.points().end());
    return out;
}

Polyline with_points(std::vector<Point> pts, const std::string& id) { return Polyline(std::move(pts), id); }

bool is_lr_pair(Part a, Part b) { return (a == Part::L && b == Part::R) || (a == Part::R && b == Part::L); }

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

std::int64_t next_power_of_two_above(const Rational& bound) {
    std::int64_t k = 1;
    while (Rational(k) <= bound) k = checked_product(k, 2, "shortening scale");
    return k;
}

std::int64_t segment_gcd(const Polyline& c, std::size_t seg) {
    const Point& a = c.points()[seg];
    const Point& b = c.points()[seg + 1];
    return std::gcd(b.x - a.x, b.y - a.y);
}

}  // namespace

ComponentSplit component_split(const CurveFamily& family) {
    for (const auto& m : family.members()) {
        if (m.shape() == MemberShape::OneCurve) {
            throw KindMismatchError("component_split needs even-curves or double-curves; " + m.id() + " is a 1-curve");
        }
    }
    const LrReport report = validate_lr(family);
    if (!report.certified()) {
        const auto& v = report.violations.front();
        throw FamilyError("component_split needs an LR-family; " + v.a + " and " + v.b + " meet on parts " +
                          to_string(v.part_a) + "/" + to_string(v.part_b));
    }
    ComponentSplit split;
    split.family = family;
    UnionFind uf(2 * family.size());
    for (const auto& pair : family_incidences(family)) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& inc : pair.points) {
            const std::size_t l = inc.part_a == Part::L ? left_piece(pair.a) : left_piece(pair.b);
            const std::size_t r = inc.part_a == Part::L ? right_piece(pair.b) : right_piece(pair.a);
            if (seen.insert({l, r}).second) {
                split.links.emplace_back(l, r);
                uf.unite(l, r);
            }
        }
    }
    std::vector<std::size_t> dense(2 * family.size(), SIZE_MAX);
    split.component.resize(2 * family.size());
    for (std::size_t p = 0; p < 2 * family.size(); ++p) {
        const std::size_t root = uf.find(p);
        if (dense[root] == SIZE_MAX) dense[root] = split.component_count++;
        split.component[p] = dense[root];
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (split.component[left_piece(i)] == split.component[right_piece(i)]) {
            split.same.push_back(i);
        } else {
            split.diff.push_back(i);
        }
    }
    return split;
}

CrossComponentColoring color_cross_component(const ComponentSplit& split, SolverBudget budget) {
    CrossComponentColoring out;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < split.component_count; ++k) labels.push_back("K" + std::to_string(k));
    out.auxiliary = IntersectionGraph(split.component_count, std::move(labels));
    for (auto c : split.diff) out.auxiliary.add_edge(split.component[left_piece(c)], split.component[right_piece(c)]);

    const auto chi = chromatic_number(out.auxiliary, std::nullopt, budget);
    out.auxiliary_chi = chi.chi;
    if (chi.chi > 4) {
        throw AuxiliaryNotFourColorable("auxiliary component graph needs " + std::to_string(chi.chi) + " colors");
    }
    out.component_colors = chi.witness;
    out.coloring.palette = split.diff.empty() ? 0 : std::max(chi.chi, 1);
    for (auto c : split.diff) out.coloring.colors.push_back(chi.witness.colors[split.component[left_piece(c)]]);
    return out;
}

NestingReport nested_or_disjoint(const CurveFamily& family) {
    NestingReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Interval a = family[i].interval();
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Interval b = family[j].interval();
            if (a.disjoint(b) || a.contains(b) || b.contains(a)) continue;
            report.ok = false;
            report.crossing = std::make_pair(i, j);
            return report;
        }
    }
    return report;
}

std::pair<CurveFamily, std::int64_t> refine_basepoints(const CurveFamily& family) {
    BigInt l = 1;
    for (const auto& m : family.members()) {
        for (const auto& b : m.basepoints()) {
            const BigInt d = boost::multiprecision::denominator(b.x);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
    }
    if (l > BigInt(kMaxCoordinate)) throw ScaleOverflow("basepoint refinement factor overflows 2^62");
    const auto factor = static_cast<std::int64_t>(l);
    return {scaled_family(family, factor), factor};
}

RewireResult rewire_semicircles(const CurveFamily& family) {
    for (const auto& m : family.members()) {
        if (m.shape() != MemberShape::Even) {
            throw KindMismatchError("rewire_semicircles needs even-curves; " + m.id() + " is a " + to_string(m.shape()));
        }
    }
    const NestingReport nesting = nested_or_disjoint(family);
    if (!nesting.ok) {
        throw IntervalCrossingError("intervals of " + family[nesting.crossing->first].id() + " and " +
                                    family[nesting.crossing->second].id() + " cross");
    }
    auto [refined, factor] = refine_basepoints(family);
    const std::size_t n = refined.size();

    std::vector<std::size_t> by_length(n);
    std::iota(by_length.begin(), by_length.end(), 0);
    std::sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
        const Interval ia = refined[a].interval(), ib = refined[b].interval();
        return ia.hi - ia.lo < ib.hi - ib.lo;
    });
    std::vector<std::int64_t> depth(n, 1);
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = by_length[oi];
        const Interval outer = refined[i].interval();
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t j = by_length[oj];
            if (outer.contains(refined[j].interval())) depth[i] = std::max(depth[i], depth[j] + 1);
        }
    }

    std::vector<Member> members;
    members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Member& m = refined[i];
        const Polyline& c = m.strands().front();
        std::vector<Point> head = prefix_points(c, m.basepoints().front().pos);
        std::vector<Point> tail = suffix_points(c, m.basepoints().back().pos);
        std::vector<Point> left, right;
        if (m.head_is_left()) {
            left = std::move(head);
            right = std::move(tail);
        } else {
            left.assign(tail.rbegin(), tail.rend());
            right.assign(head.rbegin(), head.rend());
        }
        const Coord xl = left.back().x, xr = right.front().x;
        std::vector<Point> pts = std::move(left);
        pts.push_back(Point{xl, -depth[i]});
        pts.push_back(Point{xr, -depth[i]});
        pts.insert(pts.end(), right.begin(), right.end());
        Member rewired = Member::even(with_points(std::move(pts), m.id()));
        rewired.set_level(m.level());
        members.push_back(std::move(rewired));
    }
    RewireResult out{CurveFamily(FamilyKind::LR2, std::move(members), refined.scale()), factor, std::move(depth)};
    const LrReport report = validate_lr(out.family);
    if (!report.certified()) {
        throw ReductionError("rewired family is not an LR-family: " + report.violations.front().a + " meets " +
                             report.violations.front().b);
    }
    return out;
}

Split2t split_2t(const CurveFamily& family) {
    const bool two_t = family.kind() == FamilyKind::TwoT || family.kind() == FamilyKind::LR2;
    if (!two_t || family.t() < 1) {
        throw KindMismatchError(std::string("split_2t needs a 2t-family, got kind ") + to_string(family.kind()));
    }
    const int t = family.t();
    const auto original = family_incidences(family);
    for (const auto& pair : original) {
        for (const auto& inc : pair.points) {
            if (inc.point.y < 0) {
                throw BelowBaselineIntersectionError(family[pair.a].id() + " and " + family[pair.b].id() +
                                                     " intersect below the baseline at " + to_string(inc.point));
            }
        }
    }

    auto [refined, factor] = refine_basepoints(family);
    std::vector<Polyline> curves;
    curves.reserve(refined.size());
    for (const auto& m : refined.members()) {
        curves.push_back(m.head_is_left() ? m.strands().front() : m.strands().front().reversed());
    }
    std::vector<std::vector<Basepoint>> bps;
    for (const auto& c : curves) bps.push_back(baseline_crossings_along(c));

    Split2t out;
    if (t == 1) {
        std::vector<Member> first, second;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            first.push_back(Member::one_curve(with_points(prefix_points(curves[i], bps[i][0].pos), curves[i].id())));
            second.push_back(Member::one_curve(with_points(suffix_points(curves[i], bps[i][1].pos), curves[i].id())));
        }
        out.first = CurveFamily(FamilyKind::OneCurve, std::move(first), refined.scale());
        out.second = CurveFamily(FamilyKind::OneCurve, std::move(second), refined.scale());
        out.factor = factor;
    } else {
        // Positions of every intersection with another member, per member.
        std::vector<std::vector<CurvePos>> hits(curves.size());
        for (const auto& pair : family_incidences(refined)) {
            for (auto& x : polyline_crossings(curves[pair.a], curves[pair.b])) {
                hits[pair.a].push_back(x.on_a);
                hits[pair.b].push_back(x.on_b);
            }
        }
        struct Cut {
            std::size_t seg;
            Rational lo, hi;
        };
        std::vector<Cut> ends(curves.size()), starts(curves.size());
        std::int64_t k = 1;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const CurvePos& e = bps[i][2 * std::size_t(t) - 2].pos;
            Cut end{e.t == 0 ? e.segment - 1 : e.segment, Rational(0), e.t == 0 ? Rational(1) : e.t};
            const CurvePos& s = bps[i][1].pos;
            Cut start{s.segment, s.t, Rational(1)};
            for (const auto& h : hits[i]) {
                if (h.segment == end.seg && h.t < end.hi) end.lo = std::max(end.lo, h.t);
                if (h.segment == start.seg && h.t > start.lo) start.hi = std::min(start.hi, h.t);
            }
            ends[i] = end;
            starts[i] = start;
            const Rational ge(segment_gcd(curves[i], end.seg)), gs(segment_gcd(curves[i], start.seg));
            k = std::max(k, next_power_of_two_above(Rational(1) / (ge * (end.hi - end.lo))));
            k = std::max(k, next_power_of_two_above(Rational(1) / (gs * (start.hi - start.lo))));
        }
        std::vector<Member> first, second;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const Polyline c = curves[i].scaled(k);
            const auto& pts = c.points();
            {
                const Cut& cut = ends[i];
                const std::int64_t g = segment_gcd(c, cut.seg);
                const Point step{(pts[cut.seg + 1].x - pts[cut.seg].x) / g, (pts[cut.seg + 1].y - pts[cut.seg].y) / g};
                const auto j = static_cast<std::int64_t>(boost::multiprecision::numerator(Rational(cut.hi * g))) - 1;
                std::vector<Point> prefix(pts.begin(), pts.begin() + std::ptrdiff_t(cut.seg) + 1);
                prefix.push_back(Point{pts[cut.seg].x + j * step.x, pts[cut.seg].y + j * step.y});
                first.push_back(Member::even(with_points(std::move(prefix), c.id())));
            }
            {
                const Cut& cut = starts[i];
                const std::int64_t g = segment_gcd(c, cut.seg);
                const Point step{(pts[cut.seg + 1].x - pts[cut.seg].x) / g, (pts[cut.seg + 1].y - pts[cut.seg].y) / g};
                const auto j = static_cast<std::int64_t>(boost::multiprecision::numerator(Rational(cut.lo * g))) + 1;
                std::vector<Point> suffix;
                if (j < g) suffix.push_back(Point{pts[cut.seg].x + j * step.x, pts[cut.seg].y + j * step.y});
                suffix.insert(suffix.end(), pts.begin() + std::ptrdiff_t(cut.seg) + 1, pts.end());
                second.push_back(Member::even(with_points(std::move(suffix), c.id())));
            }
        }
        const std::int64_t scale = checked_product(refined.scale(), k, "family scale");
        out.first = CurveFamily(FamilyKind::TwoT, std::move(first), scale, t - 1);
        out.second = CurveFamily(FamilyKind::TwoT, std::move(second), scale, t - 1);
        out.factor = checked_product(factor, k, "split scale");
    }

    using Key = std::tuple<std::size_t, std::size_t, Rational, Rational>;
    auto collect = [&](const CurveFamily& f) {
        std::set<Key> keys;
        const Rational inv = Rational(1) / Rational(out.factor);
        for (const auto& pair : family_incidences(f))
            for (const auto& inc : pair.points) keys.emplace(pair.a, pair.b, inc.point.x * inv, inc.point.y * inv);
        return keys;
    };
    const auto in_first = collect(out.first);
    const auto in_second = collect(out.second);
    for (const auto& pair : original) {
        for (const auto& inc : pair.points) {
            ++out.accounting.total;
            const Key key{pair.a, pair.b, inc.point.x, inc.point.y};
            if (in_first.count(key)) {
                ++out.accounting.in_first;
            } else if (in_second.count(key)) {
                ++out.accounting.in_second;
            } else if (is_lr_pair(inc.part_a, inc.part_b)) {
                ++out.accounting.lr_only;
            } else {
                ++out.accounting.missing;
            }
        }
    }
    return out;
}

Coloring exact_family_coloring(const CurveFamily& family, SolverBudget budget) {
    if (family.size() == 0) return Coloring{};
    return chromatic_number(build_graph(family), std::nullopt, budget).witness;
}

ProductColoringPlan product_color(const CurveFamily& family, const Coloring& first, const Coloring& second,
                                  const CellColorer& cell_colorer) {
    const std::size_t n = family.size();
    if (first.colors.size() != n || second.colors.size() != n) {
        throw std::invalid_argument("product_color: colorings must cover every member");
    }
    ProductColoringPlan plan;
    plan.first = first;
    plan.second = second;

    std::map<std::pair<int, int>, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) cells[{first.colors[i], second.colors[i]}].push_back(i);

    for (auto& [key, members] : cells) {
        ProductCell cell;
        cell.first_color = key.first;
        cell.second_color = key.second;
        cell.members = members;
        const CurveFamily sub = family.subset(members);
        cell.lr_certified = sub.size() == 0 || family[0].shape() == MemberShape::OneCurve ||
                            validate_lr(sub).certified();
        cell.coloring = cell_colorer(sub);
        if (cell.coloring.colors.size() != sub.size() || !is_proper(build_graph(sub), cell.coloring)) {
            throw ImproperCellColoring("cell (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                       ") received an improper coloring");
        }
        cell.coloring.palette = std::max(cell.coloring.palette, cell.coloring.used_colors());
        for (int c : cell.coloring.colors) cell.coloring.palette = std::max(cell.coloring.palette, c + 1);
        plan.cell_palette = std::max(plan.cell_palette, cell.coloring.palette);
        plan.cells.push_back(std::move(cell));
    }
    plan.cell_palette = std::max(plan.cell_palette, 1);

    auto palette_of = [](const Coloring& c) {
        int p = std::max(c.palette, 1);
        for (int x : c.colors) p = std::max(p, x + 1);
        return p;
    };
    const int p1 = palette_of(first), p2 = palette_of(second);
    plan.combined.colors.assign(n, 0);
    plan.combined.palette = p1 * p2 * plan.cell_palette;
    for (const auto& cell : plan.cells) {
        for (std::size_t j = 0; j < cell.members.size(); ++j) {
            const int base = cell.first_color * p2 + cell.second_color;
            plan.combined.colors[cell.members[j]] = base * plan.cell_palette + cell.coloring.colors[j];
        }
    }
    if (!is_proper(build_graph(family), plan.combined)) {
        throw ReductionError("combined product coloring is improper; the split colorings are not proper");
    }
    return plan;
}

TwoTColoring color_2t_family(const CurveFamily& family, SolverBudget budget) {
    TwoTColoring out;
    Split2t split = split_2t(family);
    Coloring first, second;
    if (family.t() == 1) {
        first = exact_family_coloring(split.first, budget);
        second = exact_family_coloring(split.second, budget);
    } else {
        for (const auto* part : {&split.first, &split.second}) {
            TwoTColoring inner = color_2t_family(*part, budget);
            (part == &split.first ? first : second) = inner.coloring;
            for (auto& s : inner.splits) out.splits.push_back(std::move(s));
            for (auto& p : inner.plans) out.plans.push_back(std::move(p));
        }
    }
    out.splits.insert(out.splits.begin(), std::move(split));
    auto plan = product_color(family, first, second,
                              [&](const CurveFamily& cell) { return exact_family_coloring(cell, budget); });
    out.coloring = plan.combined;
    out.plans.insert(out.plans.begin(), std::move(plan));
    return out;
}

std::vector<std::size_t> strictly_between(const std::vector<std::size_t>& order, std::size_t u, std::size_t v) {
    auto iu = std::find(order.begin(), order.end(), u);
    auto iv = std::find(order.begin(), order.end(), v);
    if (iu == order.end() || iv == order.end()) throw std::out_of_range("vertex missing from order");
    if (iv < iu) std::swap(iu, iv);
    return std::vector<std::size_t>(iu + 1, iv);
}

McGuinnessResult mcguinness_subgraph(const IntersectionGraph& g, const std::vector<std::size_t>& order, int alpha,
                                     int beta, SolverBudget budget) {
    if (alpha < 1 || beta < 0) throw std::invalid_argument("mcguinness_subgraph needs alpha >= 1 and beta >= 0");
    {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted.size() != g.size() || sorted[i] != i) {
                throw std::invalid_argument("order must list every vertex exactly once");
            }
        }
    }
    const int threshold = (2 * beta + 2) * alpha;
    if (decide_colorable(g, threshold, budget).colorable) {
        throw PreconditionUnmet("graph is " + std::to_string(threshold) + "-colorable, need chromatic number above it");
    }

    McGuinnessResult out;
    std::vector<std::size_t> block;
    for (std::size_t v : order) {
        block.push_back(v);
        if (!decide_colorable(g.induced(block), beta, budget).colorable) {
            out.blocks.push_back(std::move(block));
            block.clear();
        }
    }
    if (!block.empty()) out.blocks.push_back(std::move(block));

    const int classes = beta + 1;
    for (const auto& b : out.blocks) {
        auto r = decide_colorable(g.induced(b), classes, budget);
        if (!r.colorable) throw ReductionError("block is not (beta+1)-colorable");
        // Renumber colors by first appearance so the choice of r is canonical.
        Coloring c = *r.witness;
        std::vector<int> relabel(std::size_t(std::max(c.palette, classes)), -1);
        int next = 0;
        for (int& x : c.colors) {
            if (relabel[std::size_t(x)] < 0) relabel[std::size_t(x)] = next++;
            x = relabel[std::size_t(x)];
        }
        c.palette = classes;
        out.block_colorings.push_back(std::move(c));
    }

    auto class_union = [&](int r, int parity) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < out.blocks.size(); ++i) {
            if (parity >= 0 && int(i % 2) != parity) continue;
            for (std::size_t j = 0; j < out.blocks[i].size(); ++j)
                if (out.block_colorings[i].colors[j] == r) vs.push_back(out.blocks[i][j]);
        }
        return vs;
    };
    int best = -1;
    for (int r = 0; r < classes; ++r) {
        const int chi = chromatic_number(g.induced(class_union(r, -1)), std::nullopt, budget).chi;
        out.class_chi.push_back(chi);
        if (chi > best) {
            best = chi;
            out.chosen_class = r;
        }
    }

    auto even = class_union(out.chosen_class, 0);
    if (!decide_colorable(g.induced(even), alpha, budget).colorable) {
        out.even_parity = true;
        out.vertices = std::move(even);
    } else {
        out.even_parity = false;
        out.vertices = class_union(out.chosen_class, 1);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.subgraph = g.induced(out.vertices);
    out.chi_h = chromatic_number(out.subgraph, std::nullopt, budget).chi;
    if (out.chi_h <= alpha) throw ReductionError("selected subgraph is alpha-colorable");

    for (const auto& [a, b] : out.subgraph.edges()) {
        McGuinnessResult::EdgeWitness w{out.vertices[a], out.vertices[b], 0, 0};
        const auto between = strictly_between(order, w.u, w.v);
        w.between = between.size();
        w.chi = chromatic_number(g.induced(between), std::nullopt, budget).chi;
        if (w.chi <= beta) throw ReductionError("edge of H has a beta-colorable gap");
        out.edges.push_back(w);
    }
    return out;
}

}  // namespace curvechi
