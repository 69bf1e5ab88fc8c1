#pragma once

// Finite permutation groups given by generators, and brute-force orbit counts
// on n-tuples. Orbits are found by BFS over the tuple graph whose edges are
// generator applications; group elements are only enumerated for point
// stabilizers.

#include "growthlab/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace growthlab {

using Perm = std::vector<std::uint32_t>;

struct OrbitBudget {
    std::uint64_t max_tuples = 10'000'000;
    std::uint64_t max_elements = 1'000'000;
};

class FinPermGroup {
public:
    FinPermGroup() = default;

    /// Throws input_error unless every generator is a bijection on 0..degree-1.
    FinPermGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree), gens_(std::move(generators)) {
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const Perm& p = gens_[g];
            if (p.size() != degree_)
                throw input_error("generator " + std::to_string(g) + " has length " + std::to_string(p.size()) +
                                  ", expected degree " + std::to_string(degree_));
            std::vector<bool> seen(degree_, false);
            for (auto x : p) {
                if (x >= degree_ || seen[x]) throw input_error("generator " + std::to_string(g) + " is not a bijection");
                seen[x] = true;
            }
        }
    }

    static FinPermGroup trivial(std::size_t degree) { return FinPermGroup(degree, {}); }

    /// Sym(k) generated by (0 1) and (0 1 ... k-1).
    static FinPermGroup symmetric(std::size_t degree) {
        std::vector<Perm> gens;
        if (degree >= 2) {
            Perm swap = identity(degree);
            std::swap(swap[0], swap[1]);
            gens.push_back(swap);
        }
        if (degree >= 3) {
            Perm cycle(degree);
            for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
            gens.push_back(cycle);
        }
        return FinPermGroup(degree, std::move(gens));
    }

    static Perm identity(std::size_t degree) {
        Perm p(degree);
        for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
        return p;
    }

    /// Permutation from disjoint-or-not cycles, composed left to right as written.
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
        Perm p = identity(degree);
        for (const auto& cyc : cycles) {
            for (auto x : cyc)
                if (x >= degree) throw input_error("cycle point " + std::to_string(x) + " out of range for degree " + std::to_string(degree));
            std::set<std::uint32_t> uniq(cyc.begin(), cyc.end());
            if (uniq.size() != cyc.size()) throw input_error("cycle repeats a point");
            if (cyc.size() < 2) continue;
            Perm c = identity(degree);
            for (std::size_t i = 0; i < cyc.size(); ++i) c[cyc[i]] = cyc[(i + 1) % cyc.size()];
            // apply p first, then c
            for (auto& v : p) v = c[v];
        }
        return p;
    }

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

private:
    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
};

/// Direct product acting on the disjoint union of the factor domains, in order.
inline FinPermGroup direct_product(const std::vector<FinPermGroup>& factors) {
    std::size_t degree = 0;
    for (const auto& f : factors) degree += f.degree();
    std::vector<Perm> gens;
    std::size_t offset = 0;
    for (const auto& f : factors) {
        for (const auto& g : f.generators()) {
            Perm p = FinPermGroup::identity(degree);
            for (std::size_t i = 0; i < f.degree(); ++i) p[offset + i] = static_cast<std::uint32_t>(offset + g[i]);
            gens.push_back(std::move(p));
        }
        offset += f.degree();
    }
    return FinPermGroup(degree, std::move(gens));
}

/// base wr Sym(m) on base-domain x [m]; point (x, copy c) is c * deg + x.
/// Generators: base generators on copy 0, the copy transposition (0 1) and the m-cycle on copies.
inline FinPermGroup wreath_symmetric(const FinPermGroup& base, std::size_t m) {
    const std::size_t d = base.degree();
    const std::size_t degree = d * m;
    std::vector<Perm> gens;
    for (const auto& g : base.generators()) {
        Perm p = FinPermGroup::identity(degree);
        for (std::size_t i = 0; i < d; ++i) p[i] = g[i];
        gens.push_back(std::move(p));
    }
    auto copy_perm = [&](auto&& copy_image) {
        Perm p(degree);
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t i = 0; i < d; ++i) p[c * d + i] = static_cast<std::uint32_t>(copy_image(c) * d + i);
        return p;
    };
    if (m >= 2 && d > 0) gens.push_back(copy_perm([](std::size_t c) { return c == 0 ? 1 : c == 1 ? 0 : c; }));
    if (m >= 3 && d > 0) gens.push_back(copy_perm([m](std::size_t c) { return (c + 1) % m; }));
    return FinPermGroup(degree, std::move(gens));
}

struct OrbitCount {
    std::size_t n = 0;
    bool injective = true;
    BigInt count = 0;
    std::uint64_t tuples_visited = 0;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw capacity_error("tuple space " + std::to_string(base) + "^" + std::to_string(e) + " does not fit 64 bits");
        r *= base;
    }
    return r;
}

inline long double tuple_total(std::size_t k, std::size_t n, bool injective) {
    long double t = 1;
    for (std::size_t i = 0; i < n; ++i) t *= injective ? static_cast<long double>(k - i) : static_cast<long double>(k);
    return t;
}

/// Membership over tuple indices in [0, k^n): dense bitset when it fits, hash set otherwise.
class VisitedSet {
public:
    explicit VisitedSet(std::uint64_t space) : dense_(space <= (std::uint64_t{1} << 31)) {
        if (dense_) bits_.assign((space + 63) / 64, 0);
    }
    bool insert(std::uint64_t idx) {
        if (dense_) {
            std::uint64_t& w = bits_[idx >> 6];
            const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
            if (w & bit) return false;
            w |= bit;
            return true;
        }
        return sparse_.insert(idx).second;
    }
    bool contains(std::uint64_t idx) const {
        if (dense_) return (bits_[idx >> 6] >> (idx & 63)) & 1U;
        return sparse_.count(idx) != 0;
    }

private:
    bool dense_;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> sparse_;
};

} // namespace detail

/// Number of orbits of <generators> on n-tuples (injective or all). Throws
/// capacity_error before searching if the tuple space exceeds the budget.
inline OrbitCount count_orbits(const FinPermGroup& g, std::size_t n, bool injective, const OrbitBudget& budget = {}) {
    OrbitCount out;
    out.n = n;
    out.injective = injective;
    const std::size_t k = g.degree();
    if (n == 0) {
        out.count = 1;
        out.tuples_visited = 1;
        return out;
    }
    if (k == 0 || (injective && n > k)) return out;

    if (detail::tuple_total(k, n, injective) > static_cast<long double>(budget.max_tuples))
        throw capacity_error("orbit count on " + std::to_string(n) + "-tuples of a degree-" + std::to_string(k) +
                             " group exceeds the tuple budget of " + std::to_string(budget.max_tuples));
    const std::uint64_t space = detail::checked_pow(k, n);

    std::vector<std::uint64_t> pw(n);
    pw[0] = 1;
    for (std::size_t i = 1; i < n; ++i) pw[i] = pw[i - 1] * k;

    // tuple t = (t_0..t_{n-1}) <-> sum t_i k^i
    auto apply = [&](const Perm& p, std::uint64_t idx) {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            r += pw[i] * p[idx % k];
            idx /= k;
        }
        return r;
    };

    detail::VisitedSet visited(space);
    std::vector<std::uint64_t> queue;
    std::vector<std::uint32_t> odometer(n, 0);
    std::uint64_t orbits = 0;

    for (std::uint64_t idx = 0; idx < space; ++idx) {
        if (idx > 0) {
            // advance odometer (least significant digit first)
            for (std::size_t i = 0; i < n; ++i) {
                if (++odometer[i] < k) break;
                odometer[i] = 0;
            }
        }
        if (injective) {
            bool dup = false;
            for (std::size_t i = 1; i < n && !dup; ++i)
                for (std::size_t j = 0; j < i && !dup; ++j) dup = odometer[i] == odometer[j];
            if (dup) continue;
        }
        if (visited.contains(idx)) continue;

        ++orbits;
        visited.insert(idx);
        ++out.tuples_visited;
        queue.clear();
        queue.push_back(idx);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t cur = queue[head];
            for (const auto& p : g.generators()) {
                const std::uint64_t nxt = apply(p, cur);
                if (visited.insert(nxt)) {
                    ++out.tuples_visited;
                    queue.push_back(nxt);
                }
            }
        }
    }
    out.count = orbits;
    return out;
}

inline OrbitCount count_orbits_injective(const FinPermGroup& g, std::size_t n, const OrbitBudget& budget = {}) {
    return count_orbits(g, n, true, budget);
}

inline OrbitCount count_orbits_all(const FinPermGroup& g, std::size_t n, const OrbitBudget& budget = {}) {
    return count_orbits(g, n, false, budget);
}

/// All group elements, by closure under generator multiplication. Throws
/// capacity_error past budget.max_elements.
inline std::vector<Perm> enumerate_elements(const FinPermGroup& g, const OrbitBudget& budget = {}) {
    std::set<Perm> seen;
    std::vector<Perm> out;
    Perm id = FinPermGroup::identity(g.degree());
    seen.insert(id);
    out.push_back(id);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& gen : g.generators()) {
            Perm next(g.degree());
            for (std::size_t i = 0; i < g.degree(); ++i) next[i] = gen[out[head][i]];
            if (seen.insert(next).second) {
                if (out.size() >= budget.max_elements)
                    throw capacity_error("group has more than " + std::to_string(budget.max_elements) + " elements");
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

struct StabilizerCheck {
    std::size_t point = 0;
    std::size_t n = 0;
    BigInt stabilizer_orbits; // l_n(G_a)
    BigInt orbits_n;          // l_n(G)
    BigInt orbits_n1;         // l_{n+1}(G)
    BigInt bound;             // n l_n(G) + l_{n+1}(G)
    std::size_t stabilizer_order = 0;
    bool pass = false;
};

/// Verifies l_n(G_a) <= n l_n(G) + l_{n+1}(G) for the point stabilizer G_a.
inline StabilizerCheck stabilizer_bound_check(const FinPermGroup& g, std::size_t a, std::size_t n,
                                              const OrbitBudget& budget = {}) {
    if (a >= g.degree()) throw std::invalid_argument("stabilizer point out of range");
    if (n + 1 > g.degree()) throw std::invalid_argument("stabilizer check needs n + 1 <= degree");
    std::vector<Perm> stab;
    for (auto& e : enumerate_elements(g, budget))
        if (e[a] == a) stab.push_back(std::move(e));

    StabilizerCheck r;
    r.point = a;
    r.n = n;
    r.stabilizer_order = stab.size();
    r.stabilizer_orbits = count_orbits_injective(FinPermGroup(g.degree(), std::move(stab)), n, budget).count;
    r.orbits_n = count_orbits_injective(g, n, budget).count;
    r.orbits_n1 = count_orbits_injective(g, n + 1, budget).count;
    r.bound = BigInt(n) * r.orbits_n + r.orbits_n1;
    r.pass = r.stabilizer_orbits <= r.bound;
    return r;
}

} // namespace growthlab
