// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "curvechi/burling.hpp"
#include "curvechi/cli.hpp"
#include "curvechi/io.hpp"
#include "curvechi/reductions.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace curvechi;
using namespace curvechi::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double limit_s;  // wall-clock limit, 0 for none
    std::function<Outcome()> body;
};

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "curvechi_acceptance";
    fs::create_directories(dir);
    return dir;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

// Exhaustive k-colorability by plain backtracking, for the small k used in
// the post-condition checks.
bool colorable(const IntersectionGraph& g, int k) {
    const std::size_t n = g.size();
    std::vector<int> color(n, -1);
    std::function<bool(std::size_t)> fill = [&](std::size_t v) {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && color[u] == c);
            if (!ok) continue;
            color[v] = c;
            if (fill(v + 1)) return true;
        }
        color[v] = -1;
        return false;
    };
    return fill(0);
}

Coloring seeded_greedy(const IntersectionGraph& g, Rng& rng) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return greedy_coloring(g, order);
}

Outcome burling_generation() {
    const std::uint64_t n[] = {1, 3, 13, 181}, p[] = {1, 2, 8, 128};
    Outcome o;
    for (int k = 1; k <= 4; ++k) {
        const std::string file = (scratch() / ("X" + std::to_string(k) + ".json")).string();
        std::string report;
        const int gen = cli({"gen-burling", "--k", std::to_string(k), "--out", file});
        const int ver = cli({"verify-family", file, "--json"}, &report);
        const Json j = parse_json(report);
        const FamilyFile f = load_family(file);
        const bool ok = gen == 0 && ver == 0 && j["passed"] == true && j["violations"].empty() &&
                        j["probes_avoid_L"] == true && j["crossing_sets_disjoint"] == true &&
                        j["triangle_free"] == true && j["lr"] == true && f.family.size() == n[k - 1] &&
                        f.probes.size() == p[k - 1];
        o.pass = o.pass && ok;
        o.detail += "k=" + std::to_string(k) + " (n,p)=(" + std::to_string(f.family.size()) + "," +
                    std::to_string(f.probes.size()) + ")" + (ok ? "" : " FAILED") + "; ";
    }
    return o;
}

Outcome clique_numbers() {
    Outcome o;
    for (int k = 1; k <= 4; ++k) {
        const auto g = build_graph(generate_burling(k).family);
        const int omega = clique_number(g);
        const bool triangle = find_triangle(g).has_value();
        const bool ok = omega == (k == 1 ? 1 : 2) && !triangle;
        o.pass = o.pass && ok;
        o.detail += "omega(X" + std::to_string(k) + ")=" + std::to_string(omega) + "; ";
    }
    return o;
}

Outcome chromatic_lower_bound() {
    Outcome o;
    bool refuted_small = true, refuted_four = false;
    for (int k = 2; k <= 4; ++k) {
        const auto g = build_graph(generate_burling(k).family);
        SolverBudget budget;
        budget.time_limit = std::chrono::milliseconds(k == 4 ? 15 * 60 * 1000 : 60 * 1000);
        budget.node_limit = UINT64_MAX;
        try {
            const bool refuted = !decide_colorable(g, k - 1, budget).colorable;
            if (k == 4) {
                refuted_four = refuted;
            } else {
                refuted_small = refuted_small && refuted;
            }
            o.detail += "X" + std::to_string(k) + ": chi<=" + std::to_string(k - 1) +
                        (refuted ? " refuted; " : " NOT refuted; ");
        } catch (const SolverBudgetExceeded&) {
            if (k < 4) refuted_small = false;
            o.detail += "X" + std::to_string(k) + ": budget exceeded; ";
        }
    }

    // Audit suites, run regardless of the refutations.
    bool audits = true;
    std::size_t audited = 0;
    {
        const auto inst = generate_burling(2);
        const auto g = build_graph(inst.family);
        for (int code = 0; code < 27; ++code) {
            const Coloring c{{code % 3, code / 3 % 3, code / 9}, 3};
            if (!is_proper(g, c)) continue;
            audits = audits && audit_coloring(inst, c).colors.size() >= 2;
            ++audited;
        }
    }
    Rng rng(20240601);
    for (int k : {3, 4}) {
        const auto inst = generate_burling(k);
        const auto g = build_graph(inst.family);
        for (int round = 0; round < 1000; ++round) {
            audits = audits && audit_coloring(inst, seeded_greedy(g, rng)).colors.size() >= std::size_t(k);
            ++audited;
        }
    }
    o.detail += "audits " + std::to_string(audited) + (audits ? " all >= k" : " with failures");
    if (!refuted_four) o.detail += " (fallback criterion for k=4)";
    o.pass = refuted_small && (refuted_four || audits) && audits;
    return o;
}

Outcome planar_suite() {
    Outcome o;
    Rng rng(4001);
    FamilyParams params;
    params.members = 30;
    int worst_colors = 0, worst_chi = 0;
    std::size_t diff_total = 0;
    for (int round = 0; round < 200; ++round) {
        const CurveFamily f = random_family(rng, params);
        const auto split = component_split(f);
        const auto col = color_cross_component(split);
        const auto g = build_graph(f.subset(split.diff));
        const int chi = chromatic_number(g).chi;
        const bool ok = is_proper(g, col.coloring) && col.coloring.used_colors() <= 4 && chi <= 4;
        o.pass = o.pass && ok;
        worst_colors = std::max(worst_colors, col.coloring.used_colors());
        worst_chi = std::max(worst_chi, chi);
        diff_total += split.diff.size();
    }
    o.detail = "200 families, |F_diff| total " + std::to_string(diff_total) + ", max colors used " +
               std::to_string(worst_colors) + ", max exact chi " + std::to_string(worst_chi);
    return o;
}

Outcome rewiring() {
    Outcome o;
    Rng rng(5001);
    std::size_t edges = 0;
    for (int round = 0; round < 200; ++round) {
        FamilyParams params;
        params.members = 20;
        params.t = 1 + round % 2;
        params.laminar = true;
        const CurveFamily f = random_family(rng, params);
        const auto r = rewire_semicircles(f);
        const auto before = build_graph(f), after = build_graph(r.family);
        const bool ok = validate_lr(r.family).certified() && before == after;
        o.pass = o.pass && ok;
        edges += before.edge_count();
    }
    o.detail = "200 inputs, " + std::to_string(edges) + " edges compared";
    return o;
}

Outcome two_t_reduction() {
    Outcome o;
    Rng rng(6001);
    FamilyParams params;
    params.members = 20;
    params.t = 2;
    params.require_lr = false;
    params.forbid_below = true;
    std::size_t points = 0, lr_only = 0;
    for (int round = 0; round < 100; ++round) {
        const CurveFamily f = random_family(rng, params);
        const auto r = color_2t_family(f);
        const auto& acc = r.splits.front().accounting;
        const bool ok = is_proper(build_graph(f), r.coloring) && acc.missing == 0;
        o.pass = o.pass && ok;
        points += acc.total;
        lr_only += acc.lr_only;
    }
    o.detail = "100 families, " + std::to_string(points) + " intersection points, 0 missing required (" +
               std::to_string(lr_only) + " on L-R pairs)";
    return o;
}

Outcome mcguinness_suite() {
    Outcome o;
    Rng rng(7001);
    std::size_t edges_checked = 0;
    for (auto [alpha, beta] : {std::pair{1, 1}, std::pair{2, 1}}) {
        const int threshold = (2 * beta + 2) * alpha;
        int runs = 0, drawn = 0;
        while (runs < 100 && drawn < 20000) {
            ++drawn;
            const std::size_t n = alpha == 1 ? 12 : 17;
            const auto g = random_graph(rng, n, alpha == 1 ? 0.75 : 0.93);
            if (chromatic_number(g).chi <= threshold) continue;
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            const auto r = mcguinness_subgraph(g, order, alpha, beta);
            bool ok = !colorable(g.induced(r.vertices), alpha) && r.subgraph.edge_count() > 0;
            for (const auto& [u, v] : r.subgraph.edges()) {
                const auto between = strictly_between(order, r.vertices[u], r.vertices[v]);
                ok = ok && !colorable(g.induced(between), beta);
                ++edges_checked;
            }
            o.pass = o.pass && ok;
            ++runs;
        }
        o.pass = o.pass && runs == 100;
        o.detail += "(a,b)=(" + std::to_string(alpha) + "," + std::to_string(beta) + "): " + std::to_string(runs) +
                    " graphs; ";
    }
    o.detail += std::to_string(edges_checked) + " H-edges checked";
    return o;
}

Outcome nested_bound() {
    Outcome o;
    Rng rng(8001);
    std::uniform_int_distribution<int> size(5, 25);
    int max_chi = 0, max_xi = 0;
    for (int round = 0; round < 200; ++round) {
        const CurveFamily f = random_common_point_family(rng, size(rng));
        const bool lr = validate_lr(f).certified();
        const int xi = xi_of_family(f).xi;
        const int chi = chromatic_number(build_graph(f)).chi;
        o.pass = o.pass && lr && chi <= 4 * xi + 4;
        max_chi = std::max(max_chi, chi);
        max_xi = std::max(max_xi, xi);
    }
    o.detail = "200 families, max chi " + std::to_string(max_chi) + ", max xi " + std::to_string(max_xi);
    return o;
}

Outcome geometry_exactness() {
    Outcome o;
    Rng rng(9001);
    std::uniform_int_distribution<Coord> c(-8, 8);
    int discrepancies = 0, queries = 0;
    while (queries < 5000) {
        const Point a0{c(rng), c(rng)}, a1{c(rng), c(rng)}, b0{c(rng), c(rng)}, b1{c(rng), c(rng)};
        if (a0 == a1 || b0 == b1) continue;
        ++queries;
        const auto oracle = sample_segments(a0, a1, b0, b1);
        try {
            const auto pts = segments_intersect(Polyline({a0, a1}), Polyline({b0, b1}));
            if (oracle.overlap || pts.empty() == oracle.meet) ++discrepancies;
        } catch (const OverlapError&) {
            if (!oracle.overlap) ++discrepancies;
        }
    }
    std::uniform_int_distribution<Coord> qx(-7, 7), qy(-1, 8);
    while (queries < 10000) {
        const Polyline curve = random_cap_curve(rng, 6);
        const CapCurve cap(curve);
        const CapRaster raster(curve);
        for (int q = 0; q < 100; ++q, ++queries) {
            const Point p{qx(rng), qy(rng)};
            const auto want = raster.classify(p);
            const Region got = region_of(cap, p);
            const bool same = (want == RasterRegion::On && got == Region::On) ||
                              (want == RasterRegion::Interior && got == Region::Interior) ||
                              (want == RasterRegion::Exterior && got == Region::Exterior);
            discrepancies += !same;
        }
    }
    o.pass = discrepancies == 0;
    o.detail = std::to_string(queries) + " queries, " + std::to_string(discrepancies) + " discrepancies";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Burling generation and verification, k=1..4", 10, burling_generation},
        {2, "exact clique number of X_k", 10, clique_numbers},
        {3, "chromatic lower bound chi(X_k) >= k", 0, chromatic_lower_bound},
        {4, "cross-component coloring uses at most 4 colors", 60, planar_suite},
        {5, "rewiring preserves the labelled graph", 30, rewiring},
        {6, "2t-reduction colors properly and accounts every point", 60, two_t_reduction},
        {7, "McGuinness post-conditions", 120, mcguinness_suite},
        {8, "chi <= 4 xi + 4 on common-point families", 120, nested_bound},
        {9, "exact predicates agree with raster oracles", 0, geometry_exactness},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += " [over the " + std::to_string(int(c.limit_s)) + " s limit]";
        }
        failures += !o.pass;
        std::printf("%s criterion %d: %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
