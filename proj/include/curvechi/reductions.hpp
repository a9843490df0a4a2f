#pragma once

// Constructive steps from the χ-boundedness arguments, each with a result
// that can be checked independently of how it was produced.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvechi/families.hpp"
#include "curvechi/graph.hpp"

namespace curvechi {

// Index of a 1-curve inside L(F) ∪ R(F): member i owns 2i (its L) and 2i+1
// (its R).
inline std::size_t left_piece(std::size_t member) { return 2 * member; }
inline std::size_t right_piece(std::size_t member) { return 2 * member + 1; }

struct ComponentSplit {
    CurveFamily family;
    std::vector<std::size_t> component;              // piece -> component id, ids dense from 0
    std::size_t component_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> links;  // (L piece, R piece) of intersecting pairs
    std::vector<std::size_t> same;                   // members with L and R in one component
    std::vector<std::size_t> diff;                   // members with L and R in different components
};

ComponentSplit component_split(const CurveFamily& family);

struct CrossComponentColoring {
    IntersectionGraph auxiliary;  // components, one edge per member of F_diff
    Coloring component_colors;
    Coloring coloring;            // indexed like split.diff
    int auxiliary_chi = 0;
};

CrossComponentColoring color_cross_component(const ComponentSplit& split, SolverBudget budget = {});

struct NestingReport {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> crossing;  // member indices
};

NestingReport nested_or_disjoint(const CurveFamily& family);

// Scales a family so every extreme-end basepoint lands on a lattice point;
// returns the family and the factor used.
std::pair<CurveFamily, std::int64_t> refine_basepoints(const CurveFamily& family);

struct RewireResult {
    CurveFamily family;           // kind LR2
    std::int64_t factor = 1;      // coordinates were multiplied by this
    std::vector<std::int64_t> depth;
};

RewireResult rewire_semicircles(const CurveFamily& family);

struct SplitAccounting {
    std::size_t total = 0;     // intersection points of the input family
    std::size_t in_first = 0;  // also present in F1
    std::size_t in_second = 0; // also present in F2 (and not in F1)
    std::size_t lr_only = 0;   // L(a) ∩ R(b) points, carried by the cells
    std::size_t missing = 0;
    bool complete() const noexcept { return missing == 0; }
};

struct Split2t {
    CurveFamily first;         // prefix parts, 1-curves when t = 1
    CurveFamily second;        // suffix parts
    std::int64_t factor = 1;   // coordinates of first/second relative to the input
    SplitAccounting accounting;
};

Split2t split_2t(const CurveFamily& family);

using CellColorer = std::function<Coloring(const CurveFamily&)>;

// Optimal coloring of a family's intersection graph.
Coloring exact_family_coloring(const CurveFamily& family, SolverBudget budget = {});

struct ProductCell {
    int first_color = 0;
    int second_color = 0;
    std::vector<std::size_t> members;
    Coloring coloring;
    bool lr_certified = false;
};

struct ProductColoringPlan {
    Coloring first;
    Coloring second;
    std::vector<ProductCell> cells;
    int cell_palette = 0;
    Coloring combined;
};

ProductColoringPlan product_color(const CurveFamily& family, const Coloring& first, const Coloring& second,
                                  const CellColorer& cell_colorer);

struct TwoTColoring {
    Coloring coloring;
    std::vector<Split2t> splits;  // every split performed, outermost first
    std::vector<ProductColoringPlan> plans;
};

// split_2t and product_color applied recursively down to t = 1.
TwoTColoring color_2t_family(const CurveFamily& family, SolverBudget budget = {});

struct McGuinnessResult {
    std::vector<std::vector<std::size_t>> blocks;  // V_0 ≺ ... ≺ V_n
    std::vector<Coloring> block_colorings;         // (β+1)-colorings, indexed like blocks
    int chosen_class = 0;                          // r, 0-based
    std::vector<int> class_chi;                    // χ of each union of classes
    bool even_parity = true;
    std::vector<std::size_t> vertices;             // H, as vertices of G
    IntersectionGraph subgraph;
    int chi_h = 0;
    struct EdgeWitness {
        std::size_t u = 0;
        std::size_t v = 0;
        std::size_t between = 0;
        int chi = 0;
    };
    std::vector<EdgeWitness> edges;
};

McGuinnessResult mcguinness_subgraph(const IntersectionGraph& g, const std::vector<std::size_t>& order, int alpha,
                                     int beta, SolverBudget budget = {});

// G(u, v): vertices strictly between u and v in the order.
std::vector<std::size_t> strictly_between(const std::vector<std::size_t>& order, std::size_t u, std::size_t v);

}  // namespace curvechi
