#pragma once

// Seeded random inputs for property tests. All curves are rectilinear with
// lattice basepoints so that pixel oracles can replay them.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "curvechi/families.hpp"
#include "curvechi/geometry.hpp"
#include "curvechi/graph.hpp"

namespace curvechi::testing {

using Rng = std::mt19937_64;

struct EvenShape {
    std::vector<Coord> basepoints;  // increasing, 2t of them
    Coord left_height = 1;
    Coord left_arm = 0;             // signed arm length at the top of the L stem
    Coord right_height = 1;
    Coord right_arm = 0;
    std::vector<Coord> dips;        // depth below the baseline, one per odd gap
    std::vector<Coord> humps;       // height above the baseline, one per even gap
    bool reversed = false;
};

// Stem-and-arm ends joined by alternating dips and humps.
Polyline build_even_curve(const EvenShape& shape, const std::string& id);

struct FamilyParams {
    int members = 10;
    int t = 1;
    Coord span = 100;       // the first basepoint is drawn from [0, span)
    Coord max_gap = 10;     // bound on consecutive basepoint gaps, 0 for none
    Coord max_height = 16;
    Coord max_arm = 20;
    int attempts = 60;      // per member
    bool require_lr = true;
    bool laminar = false;   // intervals nested or disjoint
    bool forbid_below = false;  // no intersections below the baseline
};

// Adds members one at a time and keeps a candidate only if the family stays
// valid under the requested constraints; the result may be smaller than asked.
CurveFamily random_family(Rng& rng, const FamilyParams& params);

// LR-family of n 2-curves whose intervals all contain x = 0.
CurveFamily random_common_point_family(Rng& rng, int members);

// Cap-curve star-shaped around (center, 0) with coordinates within [-range, range].
Polyline random_cap_curve(Rng& rng, Coord range);

IntersectionGraph random_graph(Rng& rng, std::size_t n, double p);

}  // namespace curvechi::testing
