#pragma once

// Independent reference implementations used as test oracles. None of these
// share code paths with the library routines they check.

#include "growthlab/graph.hpp"
#include "growthlab/group_expr.hpp"
#include "growthlab/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace brute {

using growthlab::BigInt;
using growthlab::FinPermGroup;
using growthlab::Graph;
using growthlab::GroupExpr;
using growthlab::Perm;

/// Every element of the group, by closing the generator set under composition.
inline std::vector<Perm> closure(const FinPermGroup& g) {
    std::set<Perm> seen{FinPermGroup::identity(g.degree())};
    std::deque<Perm> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        Perm p = todo.front();
        todo.pop_front();
        for (const auto& s : g.generators()) {
            Perm q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = s[p[i]];
            if (seen.insert(q).second) todo.push_back(std::move(q));
        }
    }
    return {seen.begin(), seen.end()};
}

/// Orbit count on n-tuples by Burnside's lemma: average number of fixed tuples.
inline BigInt burnside(const FinPermGroup& g, std::size_t n, bool injective) {
    const auto elems = closure(g);
    BigInt total = 0;
    for (const auto& p : elems) {
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == i;
        BigInt fix = 1;
        for (std::size_t j = 0; j < n; ++j) fix *= injective ? BigInt(fixed) - BigInt(j) : BigInt(fixed);
        if (fix < 0) fix = 0;
        total += fix;
    }
    return total / BigInt(elems.size());
}

template <class Rng>
Perm random_perm(std::size_t degree, Rng& rng) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

template <class Rng>
FinPermGroup random_group(std::size_t degree, std::size_t max_gens, Rng& rng) {
    std::vector<Perm> gens;
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_gens)(rng);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_perm(degree, rng));
    return FinPermGroup(degree, std::move(gens));
}

/// Random expression tree of depth <= max_depth with finite leaves of degree <= max_leaf.
template <class Rng>
GroupExpr random_expr(std::size_t max_depth, std::size_t max_leaf, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, max_depth == 0 ? 0 : 2);
    const int kind = pick(rng);
    if (kind == 0) {
        const std::size_t deg = std::uniform_int_distribution<std::size_t>(1, max_leaf)(rng);
        return GroupExpr::finite(random_group(deg, 2, rng));
    }
    if (kind == 1) return GroupExpr::wreath(random_expr(max_depth - 1, max_leaf, rng));
    const std::size_t arity = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    std::vector<GroupExpr> parts;
    for (std::size_t i = 0; i < arity; ++i) parts.push_back(random_expr(max_depth - 1, max_leaf, rng));
    return GroupExpr::product(parts);
}

/// True iff some injective map pattern -> host preserves adjacency and non-adjacency.
inline bool embeds(const Graph& pattern, const Graph& host) {
    const std::size_t k = pattern.size(), v = host.size();
    if (k > v) return false;
    std::vector<std::size_t> img;
    std::vector<bool> used(v, false);
    auto rec = [&](auto&& self) -> bool {
        const std::size_t i = img.size();
        if (i == k) return true;
        for (std::size_t x = 0; x < v; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = pattern.has_edge(i, j) == host.has_edge(x, img[j]);
            if (!ok) continue;
            used[x] = true;
            img.push_back(x);
            if (self(self)) return true;
            img.pop_back();
            used[x] = false;
        }
        return false;
    };
    return rec(rec);
}

inline std::uint64_t count_generated(const std::vector<Graph>& gens, std::size_t n) {
    const std::size_t pairs = n * (n ? n - 1 : 0) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const Graph g = Graph::from_pair_mask(n, mask);
        if (std::any_of(gens.begin(), gens.end(), [&](const Graph& h) { return embeds(g, h); })) ++count;
    }
    return count;
}

/// Labelled graphs on [n] that are an induced subgraph of H_t, counted by
/// pushing every ordered n-subset of H_t through the adjacency and collecting
/// the distinct labelled graphs that arise.
inline std::uint64_t count_half_graph_age(std::size_t t, std::size_t n) {
    const Graph h = growthlab::half_graph(t);
    std::set<std::uint64_t> seen;
    std::vector<std::size_t> pick;
    std::vector<bool> used(h.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == n) {
            seen.insert(h.induced(pick).pair_mask());
            return;
        }
        for (std::size_t x = 0; x < h.size(); ++x) {
            if (used[x]) continue;
            used[x] = true;
            pick.push_back(x);
            self(self);
            pick.pop_back();
            used[x] = false;
        }
    };
    rec(rec);
    return seen.size();
}

/// Labelled paths on [k]: vertex orderings up to reversal, counted directly.
inline std::uint64_t count_labelled_paths(std::size_t k) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::set<std::uint64_t> seen;
    do {
        Graph g(k);
        for (std::size_t i = 0; i + 1 < k; ++i) g.set_edge(order[i], order[i + 1]);
        seen.insert(g.pair_mask());
    } while (std::next_permutation(order.begin(), order.end()));
    return seen.size();
}

} // namespace brute
