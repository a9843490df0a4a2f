#pragma once

// Burling-type probe construction: triangle-free LR-families of
// double-curves whose chromatic number grows with the recursion depth.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "curvechi/families.hpp"
#include "curvechi/graph.hpp"

namespace curvechi {

struct Probe {
    Coord x_lo = 0;
    Coord x_hi = 0;
    std::string id;
    friend bool operator==(const Probe&, const Probe&) = default;
};

struct BurlingInstance {
    int k = 0;
    CurveFamily family;  // double-curves
    std::vector<Probe> probes;
    std::int64_t scale = 1;
};

inline constexpr int kBurlingDefaultCap = 5;
inline constexpr int kBurlingHardCap = 6;

// n_k and p_k from p_{k+1} = 2 p_k^2, n_{k+1} = n_k (1 + p_k) + p_k^2.
std::uint64_t burling_member_count(int k);
std::uint64_t burling_probe_count(int k);

BurlingInstance generate_burling(int k, bool allow_large = false);

// Intersection graph read off the construction itself (no geometry).
IntersectionGraph burling_graph(int k);
// Members crossing probe j, as read off the construction.
std::vector<std::size_t> burling_crossing_indices(int k, std::size_t probe);

// X(P): ids of the members meeting the closed strip of the probe.
std::vector<std::string> crossing_set(const BurlingInstance& inst, const Probe& probe);
std::vector<std::size_t> crossing_indices(const BurlingInstance& inst, const Probe& probe);

struct BurlingReport {
    bool sizes_ok = false;
    bool probes_ok = false;          // positive width, pairwise disjoint
    bool probes_avoid_left = false;  // (1)
    bool crossing_sets_disjoint = false;  // (2)
    bool triangle_free = false;      // (3)
    bool lr_ok = false;
    bool matches_construction = false;
    std::vector<std::string> violations;

    bool passed() const {
        return sizes_ok && probes_ok && probes_avoid_left && crossing_sets_disjoint && triangle_free && lr_ok;
    }
};

// `k` of the instance is used only for the size check and the comparison
// with the combinatorial graph; everything else is read from the geometry.
BurlingReport verify_properties(const BurlingInstance& inst);
std::string format_burling_report(const BurlingReport& report);

struct AuditResult {
    std::size_t probe = 0;
    std::vector<std::string> members;  // X(P)
    std::set<int> colors;
    std::vector<char> path;            // 'A' or 'B' per recursion step, outermost first
};

// Follows the inductive argument to a probe whose crossing set sees at least
// k colors under a proper coloring.
AuditResult audit_coloring(const BurlingInstance& inst, const Coloring& coloring);

}  // namespace curvechi
