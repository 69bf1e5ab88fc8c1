#pragma once

// Expressions over the grammar
//     e ::= (finite k [gens=[...] | full-sym]) | (prod e e ...) | (wr e)
// where (wr e) is e wr S_omega. Evaluates labelled growth l_n through EGF
// products and exp(f - 1), classifies expressions, and truncates them to
// finite permutation groups for the orbit oracle.

#include "growthlab/egf.hpp"
#include "growthlab/numeric.hpp"
#include "growthlab/perm_group.hpp"
#include "growthlab/seq_core.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace growthlab {

enum class Classification { finite, cellular, msnc };

/// Output label. Cellularity is decided syntactically, hence the prefix.
inline const char* to_string(Classification c) {
    switch (c) {
    case Classification::finite: return "finite";
    case Classification::cellular: return "syntactic-cellular";
    case Classification::msnc: return "msnc";
    }
    return "?";
}

class GroupExpr {
public:
    enum class Kind { finite, product, wreath };

    static GroupExpr finite(FinPermGroup g) {
        if (g.degree() == 0) throw input_error("finite leaf needs at least one point");
        auto node = std::make_shared<Node>();
        node->kind = Kind::finite;
        node->group = std::move(g);
        node->domain = node->group.degree();
        node->has_wreath = false;
        node->has_nested_wreath = false;
        return GroupExpr(std::move(node));
    }

    /// Nested products are flattened; a single factor is returned unchanged.
    static GroupExpr product(const std::vector<GroupExpr>& factors) {
        if (factors.empty()) throw input_error("prod needs at least one factor");
        std::vector<GroupExpr> flat;
        for (const auto& f : factors) {
            if (f.kind() == Kind::product) flat.insert(flat.end(), f.children().begin(), f.children().end());
            else flat.push_back(f);
        }
        if (flat.size() == 1) return flat.front();
        auto node = std::make_shared<Node>();
        node->kind = Kind::product;
        node->children = std::move(flat);
        node->domain = 0;
        node->has_wreath = false;
        node->has_nested_wreath = false;
        for (const auto& c : node->children) {
            if (node->domain && c.domain_size()) *node->domain += *c.domain_size();
            else node->domain.reset();
            node->has_wreath = node->has_wreath || c.node_->has_wreath;
            node->has_nested_wreath = node->has_nested_wreath || c.node_->has_nested_wreath;
        }
        return GroupExpr(std::move(node));
    }

    static GroupExpr wreath(const GroupExpr& base) {
        auto node = std::make_shared<Node>();
        node->kind = Kind::wreath;
        node->children = {base};
        node->domain.reset();
        node->has_wreath = true;
        node->has_nested_wreath = base.node_->has_wreath;
        return GroupExpr(std::move(node));
    }

    Kind kind() const { return node_->kind; }
    const FinPermGroup& group() const { return node_->group; }
    const std::vector<GroupExpr>& children() const { return node_->children; }

    /// Number of points, or nullopt for an infinite domain.
    std::optional<std::size_t> domain_size() const { return node_->domain; }

    /// finite: no wreath node. cellular: every wreath has a finite argument. msnc otherwise.
    Classification classification() const {
        if (!node_->has_wreath) return Classification::finite;
        return node_->has_nested_wreath ? Classification::msnc : Classification::cellular;
    }

    /// Longest chain of prod/wr nodes from the root to a leaf.
    std::size_t depth() const {
        if (kind() == Kind::finite) return 0;
        std::size_t d = 0;
        for (const auto& c : children()) d = std::max(d, c.depth());
        return d + 1;
    }

    std::string to_string() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

private:
    struct Node {
        Kind kind = Kind::finite;
        FinPermGroup group;
        std::vector<GroupExpr> children;
        std::optional<std::size_t> domain;
        bool has_wreath = false;
        bool has_nested_wreath = false;
    };

    explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    void write(std::ostream& os) const {
        switch (kind()) {
        case Kind::finite: {
            os << "(finite " << group().degree();
            if (!group().generators().empty()) {
                os << " gens=[";
                bool first_perm = true;
                for (const auto& p : group().generators()) {
                    if (!first_perm) os << ',';
                    first_perm = false;
                    write_cycles(os, p);
                }
                os << ']';
            }
            os << ')';
            break;
        }
        case Kind::product:
            os << "(prod";
            for (const auto& c : children()) {
                os << ' ';
                c.write(os);
            }
            os << ')';
            break;
        case Kind::wreath:
            os << "(wr ";
            children().front().write(os);
            os << ')';
            break;
        }
    }

    static void write_cycles(std::ostream& os, const Perm& p) {
        std::vector<bool> done(p.size(), false);
        bool any = false;
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (done[s] || p[s] == s) continue;
            any = true;
            os << '(';
            std::size_t x = s;
            bool first = true;
            while (!done[x]) {
                done[x] = true;
                if (!first) os << ' ';
                first = false;
                os << x;
                x = p[x];
            }
            os << ')';
        }
        if (!any) os << "()";
    }

    std::shared_ptr<const Node> node_;
};

/// Parse failure with the byte offset where it was detected.
class parse_error : public input_error {
public:
    parse_error(std::size_t pos, const std::string& what)
        : input_error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    GroupExpr parse_document() {
        skip();
        GroupExpr e = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input after expression");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(i_, what); }

    void skip() {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
            else if (s_[i_] == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else break;
        }
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    std::string word() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a keyword");
        return std::string(s_.substr(start, i_ - start));
    }

    std::uint64_t number() {
        skip();
        std::size_t start = i_;
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
            if (v > 1'000'000) fail("number too large");
            ++i_;
        }
        if (start == i_) fail("expected a number");
        return v;
    }

    GroupExpr expr() {
        std::size_t open_pos = (skip(), i_);
        expect('(');
        std::string head = word();
        if (head == "finite") {
            const auto k = static_cast<std::size_t>(number());
            if (k == 0) throw parse_error(open_pos, "finite leaf needs at least one point");
            std::vector<Perm> gens;
            skip();
            if (!peek(')')) {
                std::size_t opt_pos = i_;
                std::string opt = word();
                if (opt == "full-sym") {
                    gens = FinPermGroup::symmetric(k).generators();
                } else if (opt == "gens") {
                    expect('=');
                    expect('[');
                    if (!peek(']')) {
                        gens.push_back(perm(k));
                        while (peek(',')) {
                            ++i_;
                            gens.push_back(perm(k));
                        }
                    }
                    expect(']');
                } else {
                    throw parse_error(opt_pos, "unknown finite option '" + opt + "'");
                }
            }
            expect(')');
            try {
                return GroupExpr::finite(FinPermGroup(k, std::move(gens)));
            } catch (const parse_error&) {
                throw;
            } catch (const input_error& e) {
                throw parse_error(open_pos, e.what());
            }
        }
        if (head == "prod") {
            std::vector<GroupExpr> factors;
            while (!peek(')')) {
                if (i_ >= s_.size()) fail("unterminated prod");
                factors.push_back(expr());
            }
            expect(')');
            if (factors.empty()) throw parse_error(open_pos, "prod needs at least one factor");
            return GroupExpr::product(factors);
        }
        if (head == "wr") {
            GroupExpr base = expr();
            expect(')');
            return GroupExpr::wreath(base);
        }
        throw parse_error(open_pos + 1, "unknown node '" + head + "'");
    }

    // One permutation as a product of cycles "(0 1)(2 3)"; "()" is the identity.
    Perm perm(std::size_t k) {
        std::vector<std::vector<std::uint32_t>> cycles;
        if (!peek('(')) fail("expected a cycle");
        std::size_t start = i_;
        while (peek('(')) {
            ++i_;
            std::vector<std::uint32_t> cyc;
            while (!peek(')')) {
                if (i_ >= s_.size()) fail("unterminated cycle");
                cyc.push_back(static_cast<std::uint32_t>(number()));
            }
            ++i_;
            cycles.push_back(std::move(cyc));
        }
        try {
            return FinPermGroup::from_cycles(k, cycles);
        } catch (const input_error& e) {
            throw parse_error(start, e.what());
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline GroupExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse_document(); }

inline Classification classify(const GroupExpr& e) { return e.classification(); }

namespace detail {

inline Egf eval_egf(const GroupExpr& e, std::size_t N, const OrbitBudget& budget) {
    switch (e.kind()) {
    case GroupExpr::Kind::finite: {
        std::vector<BigInt> l(N + 1, BigInt(0));
        const std::size_t top = std::min(N, e.group().degree());
        for (std::size_t n = 0; n <= top; ++n) l[n] = count_orbits_injective(e.group(), n, budget).count;
        return Egf::from_seq(IntSeq(std::move(l)));
    }
    case GroupExpr::Kind::product: {
        Egf acc = Egf::one(N);
        for (const auto& c : e.children()) acc = egf_product(acc, eval_egf(c, N, budget));
        return acc;
    }
    case GroupExpr::Kind::wreath:
        return egf_exp_shift(eval_egf(e.children().front(), N, budget));
    }
    throw std::logic_error("unreachable");
}

} // namespace detail

/// l_0..l_N by structural recursion: orbit counts at finite leaves, EGF products
/// for prod, exp(f - 1) for wr.
inline IntSeq eval_lseq(const GroupExpr& e, std::size_t N, const OrbitBudget& budget = {}) {
    if (N < 1) throw std::out_of_range("eval_lseq needs N >= 1");
    return detail::eval_egf(e, N, budget).to_seq("l");
}

inline IntSeq eval_sseq(const GroupExpr& e, std::size_t N, const OrbitBudget& budget = {}) {
    IntSeq s = stirling_transform(eval_lseq(e, N, budget));
    s.label = "s";
    return s;
}

/// Finite stand-in for e: every S_omega becomes S_m.
inline FinPermGroup truncate_expr(const GroupExpr& e, std::size_t m, std::size_t max_degree = 100'000) {
    if (m < 1) throw std::out_of_range("truncation level must be >= 1");
    FinPermGroup g;
    switch (e.kind()) {
    case GroupExpr::Kind::finite: g = e.group(); break;
    case GroupExpr::Kind::product: {
        std::vector<FinPermGroup> parts;
        for (const auto& c : e.children()) parts.push_back(truncate_expr(c, m, max_degree));
        g = direct_product(parts);
        break;
    }
    case GroupExpr::Kind::wreath: g = wreath_symmetric(truncate_expr(e.children().front(), m, max_degree), m); break;
    }
    if (g.degree() > max_degree)
        throw capacity_error("truncated domain has " + std::to_string(g.degree()) + " points, cap is " +
                             std::to_string(max_degree));
    return g;
}

/// Oracle agreement for one n at truncation levels m = n and m = n + 1.
struct OracleCheck {
    std::size_t n = 0;
    BigInt expected; // eval_lseq value
    BigInt at_m;     // truncated at m = max(n, 1)
    BigInt at_m1;    // truncated at m + 1
    std::size_t m = 0;
    std::uint64_t tuples_visited = 0;
    bool agree() const { return expected == at_m && at_m == at_m1; }
};

inline OracleCheck oracle_check(const GroupExpr& e, const IntSeq& l, std::size_t n, const OrbitBudget& budget = {}) {
    OracleCheck r;
    r.n = n;
    r.expected = l.values.at(n);
    r.m = std::max<std::size_t>(n, 1);
    auto a = count_orbits_injective(truncate_expr(e, r.m), n, budget);
    auto b = count_orbits_injective(truncate_expr(e, r.m + 1), n, budget);
    r.at_m = a.count;
    r.at_m1 = b.count;
    r.tuples_visited = a.tuples_visited + b.tuples_visited;
    return r;
}

struct GapVerdict {
    Classification classification = Classification::finite;
    IntSeq l;
    std::vector<BoundReport> reports; // empty for finite expressions
    bool pass() const {
        for (const auto& r : reports)
            if (!r.pass) return false;
        return true;
    }
};

inline std::vector<CellularPoint> default_cellular_grid() {
    std::vector<CellularPoint> grid;
    const Rational ds[] = {Rational(1, 2), Rational(3, 5), Rational(2, 3), Rational(3, 4), Rational(4, 5), Rational(9, 10)};
    const int cs[] = {1, 2, 4, 16, 256, 65536};
    for (const auto& d : ds)
        for (int c : cs) grid.push_back({Rational(c), d});
    return grid;
}

inline std::vector<Rational> default_factorial_grid() { return {Rational(1), Rational(2)}; }

/// Classification-driven bound checks: cellular -> cellular-bound over the
/// (c, d) grid; msnc -> bell-lower plus factorial-upper for each c.
inline GapVerdict gap_verdict(const GroupExpr& e, std::size_t N, const std::vector<CellularPoint>& cellular_grid,
                              const std::vector<Rational>& factorial_grid, const OrbitBudget& budget = {}) {
    if (N < 10) throw std::out_of_range("gap_verdict needs N >= 10");
    GapVerdict v;
    v.classification = classify(e);
    v.l = eval_lseq(e, N, budget);
    switch (v.classification) {
    case Classification::finite: break;
    case Classification::cellular: v.reports.push_back(check_cellular_bound(v.l, cellular_grid)); break;
    case Classification::msnc:
        v.reports.push_back(check_bell_lower(v.l));
        for (const auto& c : factorial_grid) v.reports.push_back(check_factorial_upper(v.l, c));
        break;
    }
    return v;
}

inline GapVerdict gap_verdict(const GroupExpr& e, std::size_t N) {
    return gap_verdict(e, N, default_cellular_grid(), default_factorial_grid());
}

} // namespace growthlab
