#include "curvechi/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "curvechi/errors.hpp"

namespace curvechi {

bool VertexSet::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::vector<std::size_t> VertexSet::to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t VertexSet::first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
    return n_;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

IntersectionGraph::IntersectionGraph(std::size_t n, std::vector<std::string> labels)
    : adj_(n, VertexSet(n)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
}

void IntersectionGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::size_t IntersectionGraph::max_degree() const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < size(); ++u) d = std::max(d, degree(u));
    return d;
}

std::size_t IntersectionGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (auto v : adj_[u].to_vector())
            if (u < v) out.emplace_back(u, v);
    return out;
}

IntersectionGraph IntersectionGraph::induced(std::span<const std::size_t> vertices) const {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (auto v : vertices) labels.push_back(labels_[v]);
    IntersectionGraph h(vertices.size(), std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    return h;
}

int Coloring::used_colors() const {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
}

SolverBudget SolverBudget::from_env() {
    SolverBudget b;
    if (const char* ms = std::getenv("CURVECHI_SOLVER_BUDGET_MS")) {
        const long long v = std::atoll(ms);
        if (v > 0) b.time_limit = std::chrono::milliseconds(v);
    }
    if (const char* nodes = std::getenv("CURVECHI_SOLVER_NODES")) {
        const long long v = std::atoll(nodes);
        if (v > 0) b.node_limit = static_cast<std::uint64_t>(v);
    }
    return b;
}

namespace {

class Meter {
public:
    explicit Meter(const SolverBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // False once the budget is spent.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.node_limit) return false;
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_limit) return false;
        return true;
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    SolverBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

struct BudgetSpent {};

class CliqueSearch {
public:
    CliqueSearch(const IntersectionGraph& g, Meter& meter) : g_(g), meter_(meter) {}

    std::vector<std::size_t> run() {
        VertexSet all(g_.size());
        for (std::size_t v = 0; v < g_.size(); ++v) all.set(v);
        if (g_.size() > 0) expand(all);
        return best_;
    }

private:
    void expand(VertexSet cand) {
        if (!meter_.tick()) throw BudgetSpent{};
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        VertexSet remaining = cand;
        std::size_t color = 0;
        while (remaining.any()) {
            ++color;
            VertexSet q = remaining;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q.subtract(g_.neighbors(v));
                remaining.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            VertexSet next = cand & g_.neighbors(v);
            if (!next.any()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            cand.reset(v);
        }
    }

    const IntersectionGraph& g_;
    Meter& meter_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

// Backtracking k-colorability with DSATUR vertex selection and forward
// checking. Colors are opened in increasing order only.
class ColoringSearch {
public:
    ColoringSearch(const IntersectionGraph& g, int k, Meter& meter)
        : g_(g), n_(g.size()), k_(k), meter_(meter), color_(n_, -1), forbid_(n_ * std::size_t(k), 0),
          dom_(n_, k), uncolored_degree_(n_) {
        for (std::size_t v = 0; v < n_; ++v) {
            uncolored_degree_[v] = static_cast<int>(g_.degree(v));
            neighbors_.push_back(g_.neighbors(v).to_vector());
        }
        uncolored_ = n_;
    }

    bool run(const std::vector<std::size_t>& seed_clique) {
        if (static_cast<int>(seed_clique.size()) > k_) return false;
        bool ok = true;
        for (std::size_t i = 0; i < seed_clique.size(); ++i) {
            ok = assign(seed_clique[i], static_cast<int>(i)) && ok;
        }
        used_ = static_cast<int>(seed_clique.size());
        if (!ok) return false;
        return search();
    }

    Coloring witness() const { return Coloring{color_, k_}; }

private:
    bool assign(std::size_t v, int c) {
        color_[v] = c;
        --uncolored_;
        bool ok = true;
        for (auto w : neighbors_[v]) {
            --uncolored_degree_[w];
            if (color_[w] != -1) continue;
            if (forbid_[w * k_ + c]++ == 0 && --dom_[w] == 0) ok = false;
        }
        return ok;
    }

    void unassign(std::size_t v, int c) {
        for (auto w : neighbors_[v]) {
            ++uncolored_degree_[w];
            if (color_[w] != -1) continue;
            if (--forbid_[w * k_ + c] == 0) ++dom_[w];
        }
        color_[v] = -1;
        ++uncolored_;
    }

    int effective_domain(std::size_t v) const {
        int free = 0;
        const int open = std::min(used_, k_);
        for (int c = 0; c < open; ++c) free += forbid_[v * k_ + c] == 0;
        return free + (used_ < k_ ? 1 : 0);
    }

    bool search() {
        if (!meter_.tick()) throw BudgetSpent{};
        if (uncolored_ == 0) return true;

        std::size_t best = n_;
        int best_dom = k_ + 2;
        int best_deg = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != -1) continue;
            const int d = effective_domain(v);
            if (d < best_dom || (d == best_dom && uncolored_degree_[v] > best_deg)) {
                best = v;
                best_dom = d;
                best_deg = uncolored_degree_[v];
            }
        }
        if (best_dom == 0) return false;

        const std::size_t v = best;
        const int limit = std::min(used_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (forbid_[v * k_ + c] != 0) continue;
            const int saved_used = used_;
            used_ = std::max(used_, c + 1);
            const bool ok = assign(v, c);
            if (ok && search()) return true;
            unassign(v, c);
            used_ = saved_used;
        }
        return false;
    }

    const IntersectionGraph& g_;
    std::size_t n_;
    int k_;
    Meter& meter_;
    std::vector<int> color_;
    std::vector<int> forbid_;
    std::vector<int> dom_;
    std::vector<int> uncolored_degree_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::size_t uncolored_ = 0;
    int used_ = 0;
};

std::vector<std::size_t> clique_with(const IntersectionGraph& g, Meter& meter) {
    CliqueSearch search(g, meter);
    return search.run();
}

ColorabilityResult decide_with(const IntersectionGraph& g, int colors, Meter& meter,
                               const std::vector<std::size_t>& clique) {
    ColorabilityResult result;
    if (g.size() == 0) {
        result.colorable = colors >= 0;
        result.witness = Coloring{{}, std::max(colors, 0)};
        return result;
    }
    if (colors <= 0) return result;
    ColoringSearch search(g, colors, meter);
    if (search.run(clique)) {
        result.colorable = true;
        result.witness = search.witness();
    }
    return result;
}

}  // namespace

CliqueResult max_clique(const IntersectionGraph& g, SolverBudget budget) {
    Meter meter(budget);
    CliqueResult result;
    try {
        result.witness = clique_with(g, meter);
    } catch (const BudgetSpent&) {
        throw SolverBudgetExceeded("clique search exceeded its budget", 0, static_cast<int>(g.size()));
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.omega = static_cast<int>(result.witness.size());
    result.nodes = meter.nodes();
    return result;
}

int clique_number(const IntersectionGraph& g, SolverBudget budget) { return max_clique(g, budget).omega; }

std::optional<std::array<std::size_t, 3>> find_triangle(const IntersectionGraph& g) {
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.neighbors(u).to_vector()) {
            if (v <= u) continue;
            VertexSet common = g.neighbors(u) & g.neighbors(v);
            if (common.any()) return std::array<std::size_t, 3>{u, v, common.first()};
        }
    }
    return std::nullopt;
}

ColorabilityResult decide_colorable(const IntersectionGraph& g, int colors, SolverBudget budget) {
    Meter meter(budget);
    try {
        const auto clique = clique_with(g, meter);
        auto result = decide_with(g, colors, meter, clique);
        result.nodes = meter.nodes();
        return result;
    } catch (const BudgetSpent&) {
        throw SolverBudgetExceeded("colorability query with " + std::to_string(colors) + " colors exceeded its budget",
                                   0, static_cast<int>(g.size()));
    }
}

ChromaticResult chromatic_number(const IntersectionGraph& g, std::optional<int> upper_bound_hint,
                                 SolverBudget budget) {
    ChromaticResult result;
    if (g.size() == 0) return result;

    Meter meter(budget);
    std::vector<std::size_t> clique;
    Coloring best = dsatur_coloring(g);
    int upper = best.used_colors();
    result.heuristic_upper_bound = upper;
    try {
        clique = clique_with(g, meter);
    } catch (const BudgetSpent&) {
        throw SolverBudgetExceeded("clique seed exceeded the budget", 1, upper);
    }
    int lower = static_cast<int>(clique.size());
    result.clique_lower_bound = lower;

    try {
        if (upper_bound_hint && *upper_bound_hint >= lower && *upper_bound_hint < upper) {
            auto hinted = decide_with(g, *upper_bound_hint, meter, clique);
            if (hinted.colorable) {
                upper = *upper_bound_hint;
                best = *hinted.witness;
            } else {
                result.refuted.push_back(*upper_bound_hint);
                lower = *upper_bound_hint + 1;
            }
        }
        for (int c = lower; c < upper; ++c) {
            auto r = decide_with(g, c, meter, clique);
            if (r.colorable) {
                upper = c;
                best = *r.witness;
                break;
            }
            result.refuted.push_back(c);
            lower = c + 1;
        }
    } catch (const BudgetSpent&) {
        throw SolverBudgetExceeded("chromatic number search exceeded its budget (bounds " + std::to_string(lower) +
                                       ".." + std::to_string(upper) + ")",
                                   lower, upper);
    }
    std::sort(result.refuted.begin(), result.refuted.end());
    result.chi = upper;
    best.palette = upper;
    result.witness = std::move(best);
    result.nodes = meter.nodes();
    return result;
}

Coloring greedy_coloring(const IntersectionGraph& g, std::span<const std::size_t> order) {
    const std::size_t n = g.size();
    if (order.size() != n) throw std::invalid_argument("greedy order must list every vertex once");
    std::vector<char> seen(n, 0);
    for (auto v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("greedy order is not a permutation");
        seen[v] = 1;
    }
    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<char> taken;
    for (auto v : order) {
        taken.assign(static_cast<std::size_t>(c.palette) + 1, 0);
        for (auto w : g.neighbors(v).to_vector())
            if (c.colors[w] >= 0) taken[c.colors[w]] = 1;
        int col = 0;
        while (taken[col]) ++col;
        c.colors[v] = col;
        c.palette = std::max(c.palette, col + 1);
    }
    return c;
}

Coloring dsatur_coloring(const IntersectionGraph& g) {
    const std::size_t n = g.size();
    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<std::set<int>> sat(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (c.colors[v] != -1) continue;
            if (pick == n || sat[v].size() > sat[pick].size() ||
                (sat[v].size() == sat[pick].size() && g.degree(v) > g.degree(pick))) {
                pick = v;
            }
        }
        int col = 0;
        while (sat[pick].count(col)) ++col;
        c.colors[pick] = col;
        c.palette = std::max(c.palette, col + 1);
        for (auto w : g.neighbors(pick).to_vector()) sat[w].insert(col);
    }
    return c;
}

std::optional<MonochromaticEdge> first_monochromatic_edge(const IntersectionGraph& g, const Coloring& coloring) {
    if (coloring.colors.size() != g.size()) throw std::invalid_argument("coloring does not cover every vertex");
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.neighbors(u).to_vector()) {
            if (v > u && coloring.colors[u] == coloring.colors[v]) return MonochromaticEdge{u, v, coloring.colors[u]};
        }
    }
    return std::nullopt;
}

bool is_proper(const IntersectionGraph& g, const Coloring& coloring) {
    return !first_monochromatic_edge(g, coloring).has_value();
}

std::string to_edge_list(const IntersectionGraph& g) {
    std::ostringstream os;
    const auto edges = g.edges();
    os << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

IntersectionGraph parse_edge_list(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long n = -1, m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0) throw FormatError("edge list must start with \"n m\"");
    IntersectionGraph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        if (!(is >> u >> v)) throw FormatError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge " + std::to_string(i) + " names a vertex out of range");
        if (u == v) throw FormatError("edge " + std::to_string(i) + " is a self-loop");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

}  // namespace curvechi
