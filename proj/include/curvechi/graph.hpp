#pragma once

// Intersection graphs and exact solvers for clique number and chromatic
// number on desk-scale instances.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvechi {

class CurveFamily;

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return n_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool any() const;
    std::size_t count() const;
    std::vector<std::size_t> to_vector() const;
    // Index of the lowest member or universe() if empty.
    std::size_t first() const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool intersects(const VertexSet& o) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class IntersectionGraph {
public:
    IntersectionGraph() = default;
    explicit IntersectionGraph(std::size_t n, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return adj_[u].count(); }
    std::size_t max_degree() const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Induced subgraph; vertex i of the result is vertices[i].
    IntersectionGraph induced(std::span<const std::size_t> vertices) const;

    friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

// Edge iff the two members share a point.
IntersectionGraph build_graph(const CurveFamily& family);

struct Coloring {
    std::vector<int> colors;  // vertex -> color index, 0-based
    int palette = 0;          // number of colors available (max index + 1 at least)

    int used_colors() const;
};

struct SolverBudget {
    std::uint64_t node_limit = 200'000'000;
    std::chrono::milliseconds time_limit{120'000};

    // Reads CURVECHI_SOLVER_BUDGET_MS / CURVECHI_SOLVER_NODES when set.
    static SolverBudget from_env();
};

struct CliqueResult {
    int omega = 0;
    std::vector<std::size_t> witness;
    std::uint64_t nodes = 0;
};

CliqueResult max_clique(const IntersectionGraph& g, SolverBudget budget = {});
int clique_number(const IntersectionGraph& g, SolverBudget budget = {});

std::optional<std::array<std::size_t, 3>> find_triangle(const IntersectionGraph& g);

struct ColorabilityResult {
    bool colorable = false;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

// Decision query "χ(g) ≤ colors": a proper coloring or an exhaustive
// refutation.
ColorabilityResult decide_colorable(const IntersectionGraph& g, int colors, SolverBudget budget = {});

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
    int clique_lower_bound = 0;
    int heuristic_upper_bound = 0;
    std::vector<int> refuted;  // every c < chi that was refuted exhaustively
    std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const IntersectionGraph& g, std::optional<int> upper_bound_hint = std::nullopt,
                                 SolverBudget budget = {});

Coloring greedy_coloring(const IntersectionGraph& g, std::span<const std::size_t> order);
Coloring dsatur_coloring(const IntersectionGraph& g);

struct MonochromaticEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    int color = 0;
};

std::optional<MonochromaticEdge> first_monochromatic_edge(const IntersectionGraph& g, const Coloring& coloring);
bool is_proper(const IntersectionGraph& g, const Coloring& coloring);

// Plain edge list: "n m" then one "u v" line per edge.
std::string to_edge_list(const IntersectionGraph& g);
IntersectionGraph parse_edge_list(std::string_view text);

}  // namespace curvechi
