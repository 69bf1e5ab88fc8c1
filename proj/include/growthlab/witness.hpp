#pragma once

// Backtracking searches for finite combinatorial witnesses inside a relation
// D on a finite universe:
//   order witness        (a_i, b_j) in D  iff  i < j,  for i, j < n
//   coding witness       D ∩ (X × Y × Z) is the graph of a bijection X × Y -> Z
//   tuple-coding witness the same with X, Y sets of k-tuples (D of arity 2k + 1)
// Every search reports found / none / indeterminate; budget exhaustion never
// reads as "none".

#include "growthlab/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace growthlab {

using Tuple = std::vector<std::uint32_t>;

class FinRelation {
public:
    static constexpr std::uint64_t max_index_space = std::uint64_t{1} << 32;

    FinRelation(std::size_t universe, std::size_t arity) : a_(universe), r_(arity) {
        if (universe == 0) throw input_error("relation universe must be non-empty");
        if (arity == 0) throw input_error("relation arity must be positive");
        space_ = 1;
        for (std::size_t i = 0; i < arity; ++i) {
            space_ *= universe;
            if (space_ > max_index_space) throw input_error("relation index space a^r exceeds 2^32");
        }
        bits_.assign((space_ + 63) / 64, 0);
    }

    std::size_t universe() const { return a_; }
    std::size_t arity() const { return r_; }
    std::size_t size() const { return tuples_.size(); }

    void insert(const Tuple& t) {
        const std::uint64_t idx = index(t);
        if ((bits_[idx >> 6] >> (idx & 63)) & 1U) return;
        bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        tuples_.insert(std::upper_bound(tuples_.begin(), tuples_.end(), t), t);
    }

    bool contains(const Tuple& t) const {
        const std::uint64_t idx = index(t);
        return (bits_[idx >> 6] >> (idx & 63)) & 1U;
    }

    /// Membership by mixed-radix index (first coordinate most significant).
    bool contains_index(std::uint64_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1U; }

    /// Sorted list of member tuples.
    const std::vector<Tuple>& tuples() const { return tuples_; }

    std::uint64_t index(const Tuple& t) const {
        if (t.size() != r_) throw input_error("tuple has arity " + std::to_string(t.size()) + ", expected " + std::to_string(r_));
        std::uint64_t idx = 0;
        for (auto x : t) {
            if (x >= a_) throw input_error("tuple entry " + std::to_string(x) + " outside universe of size " + std::to_string(a_));
            idx = idx * a_ + x;
        }
        return idx;
    }

private:
    std::size_t a_;
    std::size_t r_;
    std::uint64_t space_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<Tuple> tuples_;
};

enum class SearchStatus { found, none, indeterminate };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

struct WitnessBudget {
    std::uint64_t max_nodes = 10'000'000;
    unsigned jobs = 1;
};

struct OrderWitness {
    Tuple a;
    Tuple b;
};

struct OrderSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<OrderWitness> witness;
    std::uint64_t nodes = 0;
};

struct CodingWitness {
    std::size_t k = 1;
    std::vector<Tuple> x;                   // m k-tuples
    std::vector<Tuple> y;                   // m k-tuples
    std::vector<std::uint32_t> z;           // m^2 points, row-major f(x_i, y_j)
    std::uint32_t f(std::size_t i, std::size_t j) const { return z.at(i * x.size() + j); }
    std::size_t m() const { return x.size(); }
};

struct CodingSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<CodingWitness> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetExhausted {};

class OrderSearch {
public:
    OrderSearch(const FinRelation& d, std::size_t n, std::uint64_t max_nodes)
        : d_(d), n_(n), max_nodes_(max_nodes), a_(n), b_(n) {}

    bool run() { return extend(0); }
    std::uint64_t nodes() const { return nodes_; }
    OrderWitness witness() const { return {a_, b_}; }

private:
    bool rel(std::uint32_t x, std::uint32_t y) const {
        return d_.contains_index(static_cast<std::uint64_t>(x) * d_.universe() + y);
    }

    // slots: a_0, b_0, a_1, b_1, ...
    bool extend(std::size_t slot) {
        if (slot == 2 * n_) return true;
        if (++nodes_ > max_nodes_) throw BudgetExhausted{};
        const std::size_t i = slot / 2;
        const bool is_a = slot % 2 == 0;
        for (std::uint32_t v = 0; v < d_.universe(); ++v) {
            bool ok = true;
            if (is_a) {
                for (std::size_t j = 0; j < i && ok; ++j) ok = rel(v, b_[j]) == (i < j);
            } else {
                for (std::size_t k = 0; k <= i && ok; ++k) ok = rel(a_[k], v) == (k < i);
            }
            if (!ok) continue;
            (is_a ? a_ : b_)[i] = v;
            if (extend(slot + 1)) return true;
        }
        return false;
    }

    const FinRelation& d_;
    std::size_t n_;
    std::uint64_t max_nodes_;
    Tuple a_, b_;
    std::uint64_t nodes_ = 0;
};

/// Grows X and Y alternately (each in increasing index order), assigning
/// f(x_i, y_j) as soon as both ends exist. Each assignment checks the new z
/// against every assigned pair and the new pair against every chosen z, so a
/// completed m×m grid satisfies exactness.
class CodingSearch {
public:
    CodingSearch(const FinRelation& d, std::size_t m, std::size_t k, std::atomic<std::uint64_t>& nodes,
                 std::uint64_t max_nodes)
        : d_(d), m_(m), k_(k), nodes_(nodes), max_nodes_(max_nodes) {
        cand_ = 1;
        for (std::size_t i = 0; i < k; ++i) cand_ *= d.universe();
        zpow_ = d.universe();
        // step plan
        for (std::size_t s = 0; s < m; ++s) {
            steps_.push_back({Step::add_x, s, 0});
            for (std::size_t j = 0; j < s; ++j) steps_.push_back({Step::assign, s, j});
            steps_.push_back({Step::add_y, s, 0});
            for (std::size_t i = 0; i <= s; ++i) steps_.push_back({Step::assign, i, s});
        }
        xs_.assign(m, 0);
        ys_.assign(m, 0);
        f_.assign(m * m, 0);
        assigned_.assign(m * m, false);
        in_z_.assign(d.universe(), false);
    }

    std::uint64_t candidate_count() const { return cand_; }

    /// Search with x_0 fixed.
    bool run_from(std::uint64_t x0) {
        xs_[0] = x0;
        return extend(1);
    }

    CodingWitness witness() const {
        CodingWitness w;
        w.k = k_;
        for (std::size_t i = 0; i < m_; ++i) {
            w.x.push_back(decode(xs_[i]));
            w.y.push_back(decode(ys_[i]));
        }
        w.z.assign(f_.begin(), f_.end());
        return w;
    }

private:
    struct Step {
        enum Kind { add_x, add_y, assign } kind;
        std::size_t i, j;
    };

    Tuple decode(std::uint64_t idx) const {
        Tuple t(k_);
        for (std::size_t p = k_; p-- > 0;) {
            t[p] = static_cast<std::uint32_t>(idx % d_.universe());
            idx /= d_.universe();
        }
        return t;
    }

    bool rel(std::uint64_t x, std::uint64_t y, std::uint32_t z) const {
        return d_.contains_index((x * cand_ + y) * zpow_ + z);
    }

    bool extend(std::size_t step) {
        if (step == steps_.size()) return true;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > max_nodes_) throw BudgetExhausted{};
        const Step& st = steps_[step];
        switch (st.kind) {
        case Step::add_x: {
            for (std::uint64_t x = xs_[st.i - 1] + 1; x < cand_; ++x) {
                xs_[st.i] = x;
                if (extend(step + 1)) return true;
            }
            return false;
        }
        case Step::add_y: {
            const std::uint64_t lo = st.i == 0 ? 0 : ys_[st.i - 1] + 1;
            for (std::uint64_t y = lo; y < cand_; ++y) {
                ys_[st.i] = y;
                if (extend(step + 1)) return true;
            }
            return false;
        }
        case Step::assign: {
            const std::uint64_t x = xs_[st.i], y = ys_[st.j];
            // the new pair must miss every z already in use
            for (std::size_t p = 0; p < m_ * m_; ++p)
                if (assigned_[p] && rel(x, y, f_[p])) return false;
            for (std::uint32_t z = 0; z < d_.universe(); ++z) {
                if (in_z_[z] || !rel(x, y, z)) continue;
                bool clash = false;
                for (std::size_t p = 0; p < m_ * m_ && !clash; ++p)
                    if (assigned_[p]) clash = rel(xs_[p / m_], ys_[p % m_], z);
                if (clash) continue;
                const std::size_t slot = st.i * m_ + st.j;
                f_[slot] = z;
                assigned_[slot] = true;
                in_z_[z] = true;
                if (extend(step + 1)) return true;
                assigned_[slot] = false;
                in_z_[z] = false;
            }
            return false;
        }
        }
        return false;
    }

    const FinRelation& d_;
    std::size_t m_, k_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t max_nodes_;
    std::uint64_t cand_ = 0;
    std::uint64_t zpow_ = 0;
    std::vector<Step> steps_;
    std::vector<std::uint64_t> xs_, ys_;
    std::vector<std::uint32_t> f_;
    std::vector<bool> assigned_;
    std::vector<bool> in_z_;
};

} // namespace detail

/// Sequences (a_i), (b_j), i, j < n, with (a_i, b_j) in D iff i < j.
inline OrderSearchResult find_order_witness(const FinRelation& d, std::size_t n, const WitnessBudget& budget = {}) {
    if (d.arity() != 2) throw std::invalid_argument("order witness needs a binary relation");
    if (n < 1) throw std::invalid_argument("order witness needs n >= 1");
    OrderSearchResult r;
    detail::OrderSearch search(d, n, budget.max_nodes);
    try {
        if (search.run()) {
            r.status = SearchStatus::found;
            r.witness = search.witness();
        } else {
            r.status = SearchStatus::none;
        }
    } catch (const detail::BudgetExhausted&) {
        r.status = SearchStatus::indeterminate;
    }
    r.nodes = search.nodes();
    return r;
}

/// X, Y of m k-tuples each and Z of m^2 points such that D ∩ (X × Y × Z) is the
/// graph of a bijection. With jobs > 1 the x_0 choices are split across
/// threads; the witness with the smallest x_0 wins, which equals the
/// single-threaded answer unless a smaller subtree ran out of budget.
inline CodingSearchResult find_tuple_coding_witness(const FinRelation& d, std::size_t m, std::size_t k,
                                                    const WitnessBudget& budget = {}) {
    if (k < 1) throw std::invalid_argument("tuple coding needs k >= 1");
    if (m < 1) throw std::invalid_argument("coding witness needs m >= 1");
    if (d.arity() != 2 * k + 1)
        throw std::invalid_argument("tuple coding with k = " + std::to_string(k) + " needs arity " + std::to_string(2 * k + 1));

    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t cand = 1;
    for (std::size_t i = 0; i < k; ++i) cand *= d.universe();

    CodingSearchResult r;
    if (m * m > d.universe() || m > cand) {
        r.status = SearchStatus::none;
        return r;
    }

    const unsigned jobs = std::max(1U, budget.jobs);
    struct Slot {
        std::optional<CodingWitness> witness;
        std::optional<std::uint64_t> x0;
        bool exhausted = false;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(jobs);
    auto work = [&](unsigned w) {
        try {
            detail::CodingSearch search(d, m, k, nodes, budget.max_nodes);
            for (std::uint64_t x0 = w; x0 < cand; x0 += jobs) {
                try {
                    if (search.run_from(x0)) {
                        slots[w].witness = search.witness();
                        slots[w].x0 = x0;
                        return;
                    }
                } catch (const detail::BudgetExhausted&) {
                    slots[w].exhausted = true;
                    return;
                }
            }
        } catch (...) {
            slots[w].error = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    bool exhausted = false;
    for (auto& s : slots) {
        if (s.error) std::rethrow_exception(s.error);
        exhausted = exhausted || s.exhausted;
    }
    std::optional<std::uint64_t> best;
    for (auto& s : slots)
        if (s.witness && (!best || *s.x0 < *best)) {
            best = s.x0;
            r.witness = s.witness;
        }
    r.nodes = nodes.load();
    r.status = r.witness ? SearchStatus::found : exhausted ? SearchStatus::indeterminate : SearchStatus::none;
    return r;
}

inline CodingSearchResult find_coding_witness(const FinRelation& d, std::size_t m, const WitnessBudget& budget = {}) {
    if (d.arity() != 3) throw std::invalid_argument("coding witness needs a ternary relation");
    return find_tuple_coding_witness(d, m, 1, budget);
}

// ---------------------------------------------------------------------------
// Verifiers. These look tuples up in the sorted tuple list, not in the bitset
// index the searches use.

namespace detail {

inline bool listed(const FinRelation& d, const Tuple& t) {
    return std::binary_search(d.tuples().begin(), d.tuples().end(), t);
}

} // namespace detail

inline bool verify_order_witness(const FinRelation& d, const OrderWitness& w) {
    if (d.arity() != 2 || w.a.size() != w.b.size()) return false;
    for (std::size_t i = 0; i < w.a.size(); ++i)
        for (std::size_t j = 0; j < w.b.size(); ++j)
            if (detail::listed(d, {w.a[i], w.b[j]}) != (i < j)) return false;
    return true;
}

/// Re-checks every triple of X × Y × Z against D, plus sizes and bijectivity.
inline bool verify_coding_witness(const FinRelation& d, const CodingWitness& w, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::size_t m = w.x.size();
    if (w.y.size() != m) return fail("|X| != |Y|");
    if (w.z.size() != m * m) return fail("|Z| != m^2");
    if (d.arity() != 2 * w.k + 1) return fail("arity mismatch");
    for (const auto& t : w.x)
        if (t.size() != w.k) return fail("X entry of wrong length");
    for (const auto& t : w.y)
        if (t.size() != w.k) return fail("Y entry of wrong length");
    std::vector<Tuple> xs = w.x, ys = w.y;
    std::vector<std::uint32_t> zs = w.z;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::sort(zs.begin(), zs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return fail("X repeats an element");
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return fail("Y repeats an element");
    if (std::adjacent_find(zs.begin(), zs.end()) != zs.end()) return fail("f is not injective");

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::uint32_t z : w.z) {
                Tuple t = w.x[i];
                t.insert(t.end(), w.y[j].begin(), w.y[j].end());
                t.push_back(z);
                const bool in_d = detail::listed(d, t);
                const bool on_graph = w.f(i, j) == z;
                if (in_d != on_graph)
                    return fail("triple (x" + std::to_string(i) + ", y" + std::to_string(j) + ", " + std::to_string(z) +
                                (in_d ? ") is in D off the graph" : ") is on the graph but not in D"));
            }
    return true;
}

} // namespace growthlab
