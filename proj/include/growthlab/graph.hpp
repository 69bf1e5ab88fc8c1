#pragma once

// Small simple graphs on at most 64 vertices (one 64-bit adjacency word per
// vertex), hereditary classes given by generators or forbidden induced
// subgraphs, half-graphs, flipped 3P_k and the definable un-flipping of 3P_k.

#include "growthlab/numeric.hpp"
#include "growthlab/seq_core.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace growthlab {

class Graph {
public:
    static constexpr std::size_t max_vertices = 64;

    Graph() = default;
    explicit Graph(std::size_t v) : adj_(v, 0) {
        if (v > max_vertices) throw input_error("graphs are limited to " + std::to_string(max_vertices) + " vertices");
    }

    std::size_t size() const { return adj_.size(); }

    bool has_edge(std::size_t u, std::size_t w) const { return (adj_.at(u) >> w) & 1U; }

    void set_edge(std::size_t u, std::size_t w, bool on = true) {
        if (u >= size() || w >= size()) throw input_error("edge endpoint out of range");
        if (u == w) throw input_error("self-loops are not allowed");
        const std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;
        if (on) {
            adj_[u] |= bw;
            adj_[w] |= bu;
        } else {
            adj_[u] &= ~bw;
            adj_[w] &= ~bu;
        }
    }

    void toggle_edge(std::size_t u, std::size_t w) { set_edge(u, w, !has_edge(u, w)); }

    std::uint64_t neighbours(std::size_t u) const { return adj_.at(u); }
    std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(adj_.at(u))); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    bool colored() const { return colors_.has_value(); }
    const std::vector<std::uint8_t>& colors() const { return colors_.value(); }
    void set_colors(std::vector<std::uint8_t> c) {
        if (c.size() != size()) throw input_error("coloring must be total");
        for (auto x : c)
            if (x > 2) throw input_error("colors are 0, 1 or 2");
        colors_ = std::move(c);
    }
    void clear_colors() { colors_.reset(); }

    /// Subgraph induced on the listed vertices, relabelled 0..k-1 in list order.
    Graph induced(const std::vector<std::size_t>& vertices) const {
        Graph g(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (has_edge(vertices[i], vertices[j])) g.set_edge(i, j);
        return g;
    }

    /// Edge set of a labelled graph on [v], one bit per pair (i < j) in
    /// row-major order; the encoding used by labelled enumeration.
    std::uint64_t pair_mask() const {
        std::uint64_t mask = 0;
        std::size_t bit = 0;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j, ++bit)
                if (has_edge(i, j)) mask |= std::uint64_t{1} << bit;
        return mask;
    }

    static Graph from_pair_mask(std::size_t v, std::uint64_t mask) {
        Graph g(v);
        std::size_t bit = 0;
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j, ++bit)
                if ((mask >> bit) & 1U) g.set_edge(i, j);
        return g;
    }

    static Graph complete(std::size_t v) {
        Graph g(v);
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j) g.set_edge(i, j);
        return g;
    }

    static Graph complete_bipartite(std::size_t a, std::size_t b) {
        Graph g(a + b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) g.set_edge(i, a + j);
        return g;
    }

    static Graph path(std::size_t v) {
        Graph g(v);
        for (std::size_t i = 0; i + 1 < v; ++i) g.set_edge(i, i + 1);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::uint64_t> adj_;
    std::optional<std::vector<std::uint8_t>> colors_;
};

/// H_t: a_i = i, b_j = t + j, edge a_i b_j iff i <= j.
inline Graph half_graph(std::size_t t) {
    if (t < 1) throw std::invalid_argument("half_graph needs t >= 1");
    Graph g(2 * t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i; j < t; ++j) g.set_edge(i, t + j);
    return g;
}

// ---------------------------------------------------------------------------
// Flips

/// Symmetric set of position-class pairs to complement, over positions 0..t-1.
class FlipSpec {
public:
    FlipSpec() = default;
    FlipSpec(std::size_t t, std::set<std::pair<std::size_t, std::size_t>> pairs) : t_(t), pairs_(std::move(pairs)) {
        for (const auto& [i, j] : pairs_) {
            if (i >= t_ || j >= t_) throw std::invalid_argument("flip pair out of range");
            if (!pairs_.count({j, i})) throw std::invalid_argument("flip spec must be symmetric");
        }
    }

    std::size_t t() const { return t_; }
    const std::set<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
    bool flipped(std::size_t i, std::size_t j) const { return pairs_.count({i, j}) != 0; }

    /// Each unordered pair {i, j} (including i = j) is present with probability 1/2.
    template <class Rng>
    static FlipSpec random(std::size_t t, Rng& rng) {
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i; j < t; ++j)
                if (rng() & 1U) {
                    pairs.insert({i, j});
                    pairs.insert({j, i});
                }
        return FlipSpec(t, std::move(pairs));
    }

    /// The spec whose unordered pairs are the set bits of `mask` (pairs i <= j in row-major order).
    static FlipSpec from_mask(std::size_t t, std::uint64_t mask) {
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        std::size_t bit = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i; j < t; ++j, ++bit)
                if ((mask >> bit) & 1U) {
                    pairs.insert({i, j});
                    pairs.insert({j, i});
                }
        return FlipSpec(t, std::move(pairs));
    }

private:
    std::size_t t_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

/// `copies` disjoint paths on k vertices; vertex (path i, position j) is i*k + j
/// and is colored i. Pairs of distinct vertices whose positions (j, j') are in
/// spec have their adjacency complemented.
inline Graph flipped_paths(std::size_t k, std::size_t copies, const FlipSpec& spec) {
    if (k < 2) throw std::invalid_argument("flipped_paths needs k >= 2");
    if (spec.t() != k) throw std::invalid_argument("flip spec has t = " + std::to_string(spec.t()) + ", expected k");
    if (copies < 1 || copies > 3) throw std::invalid_argument("flipped_paths colors at most 3 paths");
    const std::size_t v = copies * k;
    Graph g(v);
    for (std::size_t i = 0; i < copies; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) g.set_edge(i * k + j, i * k + j + 1);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y)
            if (spec.flipped(x % k, y % k)) g.toggle_edge(x, y);
    std::vector<std::uint8_t> colors(v);
    for (std::size_t x = 0; x < v; ++x) colors[x] = static_cast<std::uint8_t>(x / k);
    g.set_colors(std::move(colors));
    return g;
}

/// Graph of phi(x, y) = OR_i [x != y, x, y in C_i, psi_i(x, y) <-> not E(x, y)] where
///   pi_i(x, y)  : x in C_i, y in C_{i+1}, same neighbourhood inside C_{i+2}
///   psi_i(x, y) : x, y in C_i and exists z with pi_i(y, z) and E(x, z)
/// with color indices taken mod 3. Colors are carried over to the result.
inline Graph flip_recover(const Graph& h) {
    if (!h.colored()) throw std::invalid_argument("flip_recover needs a 3-colored graph");
    const std::size_t v = h.size();
    const auto& col = h.colors();
    std::uint64_t cls[3] = {0, 0, 0};
    for (std::size_t x = 0; x < v; ++x) cls[col[x]] |= std::uint64_t{1} << x;

    auto pi = [&](std::size_t i, std::size_t x, std::size_t y) {
        if (col[x] != i || col[y] != (i + 1) % 3) return false;
        const std::uint64_t third = cls[(i + 2) % 3];
        return (h.neighbours(x) & third) == (h.neighbours(y) & third);
    };
    auto psi = [&](std::size_t i, std::size_t x, std::size_t y) {
        if (col[x] != i || col[y] != i) return false;
        for (std::size_t z = 0; z < v; ++z)
            if (pi(i, y, z) && h.has_edge(x, z)) return true;
        return false;
    };

    Graph out(v);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            if (col[x] != col[y]) continue;
            const std::size_t i = col[x];
            if (psi(i, x, y) == !h.has_edge(x, y)) out.set_edge(x, y);
        }
    out.set_colors(col);
    return out;
}

/// Labelled copies of P_k on [k]: k!/2.
inline BigInt labelled_path_count(std::size_t k) {
    if (k < 2) throw std::invalid_argument("labelled_path_count needs k >= 2");
    return factorial(k) / 2;
}

// ---------------------------------------------------------------------------
// Induced subgraphs and hereditary classes

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

namespace detail {

class InducedEmbedder {
public:
    InducedEmbedder(const Graph& pattern, const Graph& host, const SearchBudget& budget)
        : p_(pattern), h_(host), budget_(budget), image_(pattern.size(), 0) {
        // place vertices adjacent to already-placed ones early
        const std::size_t n = p_.size();
        std::vector<bool> placed(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n;
            int best_key = -1;
            for (std::size_t u = 0; u < n; ++u) {
                if (placed[u]) continue;
                int links = 0;
                for (auto w : order_) links += p_.has_edge(u, w) ? 1 : 0;
                int key = links * 128 + static_cast<int>(p_.degree(u));
                if (key > best_key) {
                    best_key = key;
                    best = u;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
    }

    bool run() {
        if (p_.size() > h_.size()) return false;
        return extend(0, 0);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool extend(std::size_t depth, std::uint64_t used) {
        if (depth == order_.size()) return true;
        if (++nodes_ > budget_.max_nodes)
            throw capacity_error("induced subgraph search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
        const std::size_t u = order_[depth];
        const std::size_t pdeg = p_.degree(u);
        const std::size_t pnon = p_.size() - 1 - pdeg;
        for (std::size_t x = 0; x < h_.size(); ++x) {
            if ((used >> x) & 1U) continue;
            const std::size_t hdeg = h_.degree(x);
            if (hdeg < pdeg || h_.size() - 1 - hdeg < pnon) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t w = order_[d];
                ok = p_.has_edge(u, w) == h_.has_edge(x, image_[w]);
            }
            if (!ok) continue;
            image_[u] = x;
            if (extend(depth + 1, used | (std::uint64_t{1} << x))) return true;
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    SearchBudget budget_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> image_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// True iff pattern is isomorphic to an induced subgraph of host.
inline bool has_induced_copy(const Graph& pattern, const Graph& host, const SearchBudget& budget = {}) {
    return detail::InducedEmbedder(pattern, host, budget).run();
}

struct ClassSpec {
    enum class Mode { generators, forbidden };
    Mode mode = Mode::generators;
    std::vector<Graph> graphs;

    static ClassSpec generated_by(std::vector<Graph> g) { return {Mode::generators, std::move(g)}; }
    static ClassSpec forbidding(std::vector<Graph> g) { return {Mode::forbidden, std::move(g)}; }

    bool contains(const Graph& g, const SearchBudget& budget = {}) const {
        if (mode == Mode::generators) {
            for (const auto& gen : graphs)
                if (has_induced_copy(g, gen, budget)) return true;
            return false;
        }
        for (const auto& f : graphs)
            if (has_induced_copy(f, g, budget)) return false;
        return true;
    }
};

inline const char* to_string(ClassSpec::Mode m) { return m == ClassSpec::Mode::generators ? "generators" : "forbidden"; }

constexpr std::size_t max_labelled_n = 7;

/// Number of labelled graphs on [n] in the class, by testing all 2^{C(n,2)}
/// graphs. Work is split into contiguous mask ranges, one per job; the sum does
/// not depend on the split.
inline BigInt count_labelled(const ClassSpec& spec, std::size_t n, unsigned jobs = 1, const SearchBudget& budget = {}) {
    if (n > max_labelled_n) throw std::out_of_range("count_labelled is limited to n <= " + std::to_string(max_labelled_n));
    const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned w) {
        try {
            const std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                if (spec.contains(Graph::from_pair_mask(n, mask), budget)) ++partial[w];
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    BigInt sum = 0;
    for (auto p : partial) sum += p;
    return sum;
}

// ---------------------------------------------------------------------------
// Semi-induced half-graphs

namespace detail {

class SemiInducedSearch {
public:
    SemiInducedSearch(const Graph& g, bool strict, const SearchBudget& budget) : g_(g), strict_(strict), budget_(budget) {}

    /// Looks for a_0..a_{t-1}, b_0..b_{t-1} with E(a_i, b_j) iff i <= j.
    bool exists(std::size_t t) {
        t_ = t;
        a_.assign(t, 0);
        b_.assign(t, 0);
        return extend(0);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // slot 2i is a_i, slot 2i+1 is b_i
    bool extend(std::size_t slot) {
        if (slot == 2 * t_) return true;
        if (++nodes_ > budget_.max_nodes)
            throw capacity_error("semi-induced search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
        const std::size_t idx = slot / 2;
        const bool is_a = slot % 2 == 0;
        for (std::size_t x = 0; x < g_.size(); ++x) {
            if (!fits(x, idx, is_a)) continue;
            (is_a ? a_ : b_)[idx] = x;
            if (extend(slot + 1)) return true;
        }
        return false;
    }

    bool fits(std::size_t x, std::size_t idx, bool is_a) const {
        // already-placed slots: a_0..a_{idx-1}, b_0..b_{idx-1}, plus a_idx when placing b_idx
        const std::size_t placed_a = is_a ? idx : idx + 1;
        const std::size_t placed_b = idx;
        for (std::size_t i = 0; i < placed_a; ++i) {
            if (is_a || strict_) {
                if (a_[i] == x) return false;
            }
        }
        for (std::size_t j = 0; j < placed_b; ++j) {
            if (!is_a || strict_) {
                if (b_[j] == x) return false;
            }
        }
        if (is_a) {
            for (std::size_t j = 0; j < placed_b; ++j)
                if (g_.has_edge(x, b_[j]) != (idx <= j)) return false;
        } else {
            for (std::size_t i = 0; i < placed_a; ++i)
                if (g_.has_edge(a_[i], x) != (i <= idx)) return false;
        }
        return true;
    }

    const Graph& g_;
    bool strict_;
    SearchBudget budget_;
    std::size_t t_ = 0;
    std::vector<std::size_t> a_, b_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Largest t with H_t semi-induced in g. strict: the map is injective on
/// U and V together; lax: injective on each side only.
inline std::size_t semi_induced_order(const Graph& g, bool strict = true, const SearchBudget& budget = {}) {
    detail::SemiInducedSearch search(g, strict, budget);
    std::size_t t = 0;
    const std::size_t cap = strict ? g.size() / 2 : g.size();
    while (t < cap && search.exists(t + 1)) ++t;
    return t;
}

} // namespace growthlab
