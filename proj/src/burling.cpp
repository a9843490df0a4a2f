#include "curvechi/burling.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace curvechi {

namespace {

// L is the vertical segment x = lx, 0 <= y <= lh. R is a stem at x = rx up to
// y = rh followed by an arm to x = re.
struct RawDouble {
    Coord lx, lh, rx, rh, re;
    std::string id;
};

struct RawInstance {
    std::vector<RawDouble> members;
    std::vector<Probe> probes;
    Coord height = 0;
    Coord width = 0;
};

Coord add_checked(Coord a, Coord b) {
    const Wide s = Wide(a) + b;
    if (s > kMaxCoordinate || s < -kMaxCoordinate) throw ScaleOverflow("Burling coordinates exceed 2^62");
    return Coord(s);
}

Coord mul_checked(Coord a, Coord b) {
    const Wide p = Wide(a) * b;
    if (p > kMaxCoordinate || p < -kMaxCoordinate) throw ScaleOverflow("Burling coordinates exceed 2^62");
    return Coord(p);
}

// Shifts every x strictly right of some cut by `gap` per such cut.
struct GapInsertion {
    std::vector<Coord> cuts;  // sorted
    Coord gap;
    Coord operator()(Coord x) const {
        const auto before = std::lower_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
        return add_checked(x, mul_checked(Coord(before), gap));
    }
};

RawInstance base_instance() {
    RawInstance r;
    r.members.push_back(RawDouble{1, 2, 2, 2, 5, "x"});
    r.probes.push_back(Probe{3, 4, "p"});
    r.height = 2;
    r.width = 5;
    return r;
}

RawDouble moved(const RawDouble& d, const GapInsertion& gx, Coord dx, Coord dy, const std::string& prefix) {
    return RawDouble{add_checked(gx(d.lx), dx), add_checked(d.lh, dy), add_checked(gx(d.rx), dx),
                     add_checked(d.rh, dy), add_checked(gx(d.re), dx), prefix + d.id};
}

std::vector<Coord> sorted_cuts(const std::vector<Probe>& probes) {
    std::vector<Coord> cuts;
    for (const auto& p : probes) cuts.push_back(p.x_lo);
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

RawInstance step(const RawInstance& in) {
    const Coord pk = Coord(in.probes.size());
    const Coord hgap = in.height + 2;

    // Inner copy widened by three columns right after each probe's left side.
    const GapInsertion widen{sorted_cuts(in.probes), 3};
    const Coord inner_width = widen(in.width);
    const Coord gap = add_checked(add_checked(inner_width, mul_checked(4, pk)), 1);
    const GapInsertion outer_shift{sorted_cuts(in.probes), gap};

    RawInstance out;
    out.height = in.height + hgap;
    out.width = outer_shift(in.width);
    for (const auto& d : in.members) out.members.push_back(moved(d, outer_shift, 0, hgap, ""));

    std::vector<Probe> widened_inner;
    for (const auto& q : in.probes) widened_inner.push_back(Probe{widen(q.x_lo), widen(q.x_hi), q.id});

    std::vector<RawDouble> connectors;
    for (std::size_t i = 0; i < in.probes.size(); ++i) {
        const Probe& p = in.probes[i];
        const Coord base = outer_shift(p.x_lo);
        const std::string prefix = p.id + "/";
        for (const auto& d : in.members) out.members.push_back(moved(d, widen, base, 0, prefix));
        for (std::size_t j = 0; j < in.probes.size(); ++j) {
            const Probe& q = widened_inner[j];
            const Coord lo = add_checked(base, q.x_lo);
            const Coord stem = add_checked(base, inner_width + 1 + 4 * Coord(j));
            connectors.push_back(RawDouble{lo + 3, in.height + 1, stem, in.height + 1, stem + 3, prefix + q.id + "*"});
            out.probes.push_back(Probe{lo + 1, lo + 2, prefix + q.id + "A"});
            out.probes.push_back(Probe{stem + 1, stem + 2, prefix + q.id + "B"});
        }
    }
    out.members.insert(out.members.end(), connectors.begin(), connectors.end());
    return out;
}

Member to_member(const RawDouble& d) {
    Polyline left({Point{d.lx, 0}, Point{d.lx, d.lh}});
    Polyline right({Point{d.rx, 0}, Point{d.rx, d.rh}, Point{d.re, d.rh}});
    Member m = Member::double_curve(d.id, std::move(left), std::move(right));
    m.set_level(std::to_string(std::count(d.id.begin(), d.id.end(), '/')));
    return m;
}

bool strand_meets_strip(const Polyline& c, const Probe& p) {
    for (std::size_t s = 0; s < c.segment_count(); ++s) {
        const Coord a = c.points()[s].x, b = c.points()[s + 1].x;
        if (std::max(a, b) >= p.x_lo && std::min(a, b) <= p.x_hi) return true;
    }
    return false;
}

bool members_meet(const Member& a, const Member& b) {
    for (const auto& sa : a.strands())
        for (const auto& sb : b.strands())
            if (!polyline_crossings(sa, sb).empty()) return true;
    return false;
}

void check_k(int k, bool allow_large) {
    const int cap = allow_large ? kBurlingHardCap : kBurlingDefaultCap;
    if (k < 1 || k > cap) {
        throw std::invalid_argument("Burling depth k must lie in 1.." + std::to_string(cap) +
                                    (allow_large ? "" : " (larger depths need the override flag)"));
    }
}

}  // namespace

std::uint64_t burling_probe_count(int k) {
    std::uint64_t p = 1;
    for (int i = 1; i < k; ++i) p = 2 * p * p;
    return p;
}

std::uint64_t burling_member_count(int k) {
    std::uint64_t n = 1, p = 1;
    for (int i = 1; i < k; ++i) {
        n = n * (1 + p) + p * p;
        p = 2 * p * p;
    }
    return n;
}

BurlingInstance generate_burling(int k, bool allow_large) {
    check_k(k, allow_large);
    constexpr std::uint64_t kMemberLimit = 50'000'000;
    if (burling_member_count(k) > kMemberLimit) {
        throw ScaleOverflow("X_" + std::to_string(k) + " has " + std::to_string(burling_member_count(k)) +
                            " double-curves, beyond what can be materialized");
    }
    RawInstance raw = base_instance();
    for (int i = 1; i < k; ++i) raw = step(raw);

    BurlingInstance inst;
    inst.k = k;
    std::vector<Member> members;
    members.reserve(raw.members.size());
    for (const auto& d : raw.members) members.push_back(to_member(d));
    inst.family = CurveFamily(FamilyKind::Double, std::move(members));
    inst.probes = std::move(raw.probes);
    return inst;
}

std::vector<std::size_t> burling_crossing_indices(int k, std::size_t probe) {
    if (k == 1) {
        if (probe != 0) throw std::out_of_range("probe index out of range");
        return {0};
    }
    const std::size_t n = burling_member_count(k - 1);
    const std::size_t p = burling_probe_count(k - 1);
    if (probe >= 2 * p * p) throw std::out_of_range("probe index out of range");
    const std::size_t i = probe / 2 / p, j = probe / 2 % p;
    std::vector<std::size_t> out = burling_crossing_indices(k - 1, i);
    if (probe % 2 == 0) {
        for (auto m : burling_crossing_indices(k - 1, j)) out.push_back(n * (1 + i) + m);
    } else {
        out.push_back(n * (1 + p) + i * p + j);
    }
    return out;
}

IntersectionGraph burling_graph(int k) {
    check_k(k, true);
    if (k == 1) return IntersectionGraph(1);
    const IntersectionGraph inner = burling_graph(k - 1);
    const std::size_t n = inner.size();
    const std::size_t p = burling_probe_count(k - 1);
    IntersectionGraph g(burling_member_count(k));
    for (std::size_t copy = 0; copy <= p; ++copy)
        for (const auto& [u, v] : inner.edges()) g.add_edge(copy * n + u, copy * n + v);
    std::vector<std::vector<std::size_t>> crossing(p);
    for (std::size_t j = 0; j < p; ++j) crossing[j] = burling_crossing_indices(k - 1, j);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (auto m : crossing[j]) g.add_edge(n * (1 + p) + i * p + j, n * (1 + i) + m);
    return g;
}

std::vector<std::size_t> crossing_indices(const BurlingInstance& inst, const Probe& probe) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
        for (const auto& s : inst.family[i].strands()) {
            if (strand_meets_strip(s, probe)) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

std::vector<std::string> crossing_set(const BurlingInstance& inst, const Probe& probe) {
    std::vector<std::string> ids;
    for (auto i : crossing_indices(inst, probe)) ids.push_back(inst.family[i].id());
    return ids;
}

BurlingReport verify_properties(const BurlingInstance& inst) {
    BurlingReport r;
    const auto& f = inst.family;
    auto violation = [&](std::string s) { r.violations.push_back(std::move(s)); };

    r.sizes_ok = inst.k >= 1 && f.size() == burling_member_count(inst.k) &&
                 inst.probes.size() == burling_probe_count(inst.k);
    if (!r.sizes_ok) {
        violation("size: " + std::to_string(f.size()) + " curves and " + std::to_string(inst.probes.size()) +
                  " probes, expected " + std::to_string(burling_member_count(inst.k)) + " and " +
                  std::to_string(burling_probe_count(inst.k)));
    }

    r.probes_ok = true;
    std::vector<Probe> sorted = inst.probes;
    std::sort(sorted.begin(), sorted.end(), [](const Probe& a, const Probe& b) { return a.x_lo < b.x_lo; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].x_lo >= sorted[i].x_hi) {
            r.probes_ok = false;
            violation("probe " + sorted[i].id + " has no width");
        }
        if (i > 0 && sorted[i].x_lo <= sorted[i - 1].x_hi) {
            r.probes_ok = false;
            violation("probes " + sorted[i - 1].id + " and " + sorted[i].id + " overlap");
        }
    }

    r.probes_avoid_left = true;
    r.crossing_sets_disjoint = true;
    for (const auto& p : inst.probes) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i].shape() == MemberShape::Double && strand_meets_strip(f[i].strands()[0], p)) {
                r.probes_avoid_left = false;
                violation("(1) probe " + p.id + " meets L(" + f[i].id() + ")");
            }
        }
        const auto xs = crossing_indices(inst, p);
        for (std::size_t a = 0; a < xs.size(); ++a) {
            for (std::size_t b = a + 1; b < xs.size(); ++b) {
                if (members_meet(f[xs[a]], f[xs[b]])) {
                    r.crossing_sets_disjoint = false;
                    violation("(2) " + f[xs[a]].id() + " and " + f[xs[b]].id() + " both cross probe " + p.id +
                              " and intersect");
                }
            }
        }
    }

    const IntersectionGraph g = build_graph(f);
    const auto triangle = find_triangle(g);
    r.triangle_free = !triangle.has_value();
    if (triangle) {
        violation("(3) triangle " + f[(*triangle)[0]].id() + " " + f[(*triangle)[1]].id() + " " +
                  f[(*triangle)[2]].id());
    }

    const LrReport lr = validate_lr(f);
    r.lr_ok = lr.certified();
    for (const auto& v : lr.violations) {
        violation("LR: " + v.a + " and " + v.b + " meet at " + to_string(v.point) + " on " + to_string(v.part_a) +
                  "/" + to_string(v.part_b));
    }

    if (r.sizes_ok && inst.k <= kBurlingHardCap) r.matches_construction = g == [&] {
        IntersectionGraph expected = burling_graph(inst.k);
        IntersectionGraph relabeled(expected.size(), g.labels());
        for (const auto& [u, v] : expected.edges()) relabeled.add_edge(u, v);
        return relabeled;
    }();
    return r;
}

std::string format_burling_report(const BurlingReport& r) {
    std::ostringstream os;
    auto line = [&](const char* name, bool ok) { os << (ok ? "pass " : "FAIL ") << name << '\n'; };
    line("sizes", r.sizes_ok);
    line("probes", r.probes_ok);
    line("probes-avoid-L", r.probes_avoid_left);
    line("crossing-sets-disjoint", r.crossing_sets_disjoint);
    line("triangle-free", r.triangle_free);
    line("lr-family", r.lr_ok);
    for (const auto& v : r.violations) os << "violation " << v << '\n';
    return os.str();
}

namespace {

struct LocalAudit {
    std::size_t probe;
    std::set<int> colors;
    std::vector<char> path;
};

LocalAudit audit_rec(int k, std::size_t offset, const Coloring& phi) {
    if (k == 1) return LocalAudit{0, {phi.colors[offset]}, {}};
    const std::size_t n = burling_member_count(k - 1);
    const std::size_t p = burling_probe_count(k - 1);
    LocalAudit outer = audit_rec(k - 1, offset, phi);
    const std::size_t i = outer.probe;
    LocalAudit inner = audit_rec(k - 1, offset + n * (1 + i), phi);
    const std::size_t j = inner.probe;
    LocalAudit out;
    out.path = outer.path;
    out.colors = outer.colors;
    if (outer.colors != inner.colors) {
        out.probe = 2 * (i * p + j);
        out.colors.insert(inner.colors.begin(), inner.colors.end());
        out.path.push_back('A');
    } else {
        out.probe = 2 * (i * p + j) + 1;
        out.colors.insert(phi.colors[offset + n * (1 + p) + i * p + j]);
        out.path.push_back('B');
    }
    return out;
}

}  // namespace

AuditResult audit_coloring(const BurlingInstance& inst, const Coloring& coloring) {
    if (coloring.colors.size() != inst.family.size()) {
        throw ImproperColoring("coloring has " + std::to_string(coloring.colors.size()) + " entries for " +
                               std::to_string(inst.family.size()) + " curves");
    }
    const IntersectionGraph g = burling_graph(inst.k);
    if (auto bad = first_monochromatic_edge(g, coloring)) {
        throw ImproperColoring("curves " + inst.family[bad->u].id() + " and " + inst.family[bad->v].id() +
                               " intersect and share color " + std::to_string(bad->color));
    }
    LocalAudit local = audit_rec(inst.k, 0, coloring);
    AuditResult out;
    out.probe = local.probe;
    out.path = std::move(local.path);
    const auto members = crossing_indices(inst, inst.probes.at(local.probe));
    for (auto m : members) {
        out.members.push_back(inst.family[m].id());
        out.colors.insert(coloring.colors[m]);
    }
    if (!std::includes(out.colors.begin(), out.colors.end(), local.colors.begin(), local.colors.end())) {
        throw std::logic_error("audit probe does not carry the colors derived for it");
    }
    return out;
}

}  // namespace curvechi
