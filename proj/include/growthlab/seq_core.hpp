#pragma once

// Exact integer sequence kernel: Stirling numbers of the second kind, Bell and
// second-order Bell numbers, the Stirling transform, and growth-bound checks
// decided purely by big-integer comparison.

#include "growthlab/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace growthlab {

/// Finite prefix a_0..a_N of an integer sequence.
struct IntSeq {
    std::vector<BigInt> values;
    std::string label;

    IntSeq() = default;
    explicit IntSeq(std::vector<BigInt> v, std::string l = {}) : values(std::move(v)), label(std::move(l)) {}

    std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
    const BigInt& operator[](std::size_t n) const { return values.at(n); }
    bool operator==(const IntSeq& other) const { return values == other.values; }

    /// Opt-in check for growth sequences of infinite structures.
    bool nondecreasing_from_one() const {
        for (std::size_t n = 2; n < values.size(); ++n)
            if (values[n] < values[n - 1]) return false;
        return true;
    }
};

/// Rows 0..N of the Stirling triangle S(n,k), built once by the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
class StirlingTable {
public:
    explicit StirlingTable(std::size_t max_n) : rows_(max_n + 1) {
        rows_[0] = {BigInt(1)};
        for (std::size_t n = 1; n <= max_n; ++n) {
            auto& row = rows_[n];
            const auto& prev = rows_[n - 1];
            row.assign(n + 1, BigInt(0));
            for (std::size_t k = 1; k <= n; ++k) {
                BigInt v = prev.size() > k ? BigInt(k) * prev[k] : BigInt(0);
                v += prev[k - 1];
                row[k] = std::move(v);
            }
        }
    }

    std::size_t max_n() const { return rows_.size() - 1; }

    BigInt operator()(std::size_t n, std::size_t k) const {
        if (n > max_n()) throw std::out_of_range("StirlingTable: n beyond table");
        if (k > n) return 0;
        return rows_[n][k];
    }

    const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

private:
    std::vector<std::vector<BigInt>> rows_;
};

inline BigInt stirling2(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    return StirlingTable(n)(n, k);
}

inline BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::vector<BigInt> factorials(std::size_t max_n) {
    std::vector<BigInt> f(max_n + 1);
    f[0] = 1;
    for (std::size_t i = 1; i <= max_n; ++i) f[i] = f[i - 1] * i;
    return f;
}

/// Stirling transform s_n = sum_{k=1}^n S(n,k) l_k, with s_0 = l_0.
inline IntSeq stirling_transform(const IntSeq& l) {
    if (l.values.empty()) return IntSeq({}, l.label);
    const std::size_t N = l.order();
    StirlingTable S(N);
    std::vector<BigInt> s(N + 1);
    s[0] = l.values[0];
    for (std::size_t n = 1; n <= N; ++n) {
        BigInt acc = 0;
        const auto& row = S.row(n);
        for (std::size_t k = 1; k <= n; ++k) acc += row[k] * l.values[k];
        s[n] = std::move(acc);
    }
    return IntSeq(std::move(s), l.label.empty() ? std::string{} : "stirling(" + l.label + ")");
}

/// Inverse Stirling transform: recovers l from s = stirling_transform(l).
inline IntSeq inverse_stirling_transform(const IntSeq& s) {
    if (s.values.empty()) return s;
    const std::size_t N = s.order();
    StirlingTable S(N);
    std::vector<BigInt> l(N + 1);
    l[0] = s.values[0];
    for (std::size_t n = 1; n <= N; ++n) {
        BigInt rest = 0;
        for (std::size_t k = 1; k < n; ++k) rest += S(n, k) * l[k];
        l[n] = s.values[n] - rest; // S(n,n) = 1
    }
    return IntSeq(std::move(l));
}

inline std::vector<BigInt> bell_prefix(std::size_t max_n) {
    StirlingTable S(max_n);
    std::vector<BigInt> b(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        BigInt acc = 0;
        for (const auto& v : S.row(n)) acc += v;
        b[n] = std::move(acc);
    }
    return b;
}

inline BigInt bell(std::size_t n) { return bell_prefix(n)[n]; }

/// Second-order Bell numbers B^(2)_n = sum_k S(n,k) B_k (refinement pairs of partitions).
inline std::vector<BigInt> bell2_prefix(std::size_t max_n) {
    return stirling_transform(IntSeq(bell_prefix(max_n))).values;
}

inline BigInt bell2(std::size_t n) { return bell2_prefix(n)[n]; }

// ---------------------------------------------------------------------------
// Growth bounds

enum class BoundKind { cellular_bound, bell_lower, factorial_upper };

inline const char* to_string(BoundKind k) {
    switch (k) {
    case BoundKind::cellular_bound: return "cellular-bound";
    case BoundKind::bell_lower: return "bell-lower";
    case BoundKind::factorial_upper: return "factorial-upper";
    }
    return "?";
}

/// One point (c, d) of a cellular-bound grid: l_n <= c n^{d n}.
struct CellularPoint {
    Rational c;
    Rational d;
};

struct BoundReport {
    BoundKind kind = BoundKind::bell_lower;
    std::optional<Rational> c;
    std::optional<Rational> d;
    std::optional<std::size_t> n0;
    std::size_t range_lo = 0;
    std::size_t range_hi = 0;
    bool pass = false;
    std::optional<std::size_t> first_fail;
    /// cellular-bound only: smallest p/100 with l_n <= n^{(p/100) n} on 2..N.
    std::optional<Rational> d_estimate;
};

namespace detail {

inline void require_order(const IntSeq& l) {
    if (l.values.size() < 6) throw std::out_of_range("bound checks need a prefix to index N >= 5");
}

inline BigInt ipow(const BigInt& base, std::size_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

// l <= c n^{d n}  <=>  l^q den(c)^q <= num(c)^q n^{p n}   (d = p/q, all exact)
inline bool cellular_holds(const BigInt& l, std::size_t n, const Rational& c, const Rational& d) {
    const BigInt p = num(d), q = den(d);
    const auto qi = q.convert_to<std::size_t>();
    const auto pn = p.convert_to<std::size_t>() * n;
    BigInt lhs = ipow(l, qi) * ipow(den(c), qi);
    BigInt rhs = ipow(num(c), qi) * ipow(BigInt(n), pn);
    return lhs <= rhs;
}

inline std::size_t smallest_percent_exponent(const BigInt& l, std::size_t n) {
    if (l <= 1) return 0;
    const BigInt lhs = ipow(l, 100);
    auto ok = [&](std::size_t p) { return lhs <= ipow(BigInt(n), p * n); };
    std::size_t hi = 100;
    while (!ok(hi)) hi *= 2;
    std::size_t lo = 0;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

} // namespace detail

/// l_n >= B_n for 1 <= n <= N.
inline BoundReport check_bell_lower(const IntSeq& l) {
    detail::require_order(l);
    const std::size_t N = l.order();
    const auto B = bell_prefix(N);
    BoundReport r;
    r.kind = BoundKind::bell_lower;
    r.range_lo = 1;
    r.range_hi = N;
    r.pass = true;
    for (std::size_t n = 1; n <= N; ++n) {
        if (l.values[n] < B[n]) {
            r.pass = false;
            r.first_fail = n;
            break;
        }
    }
    return r;
}

/// Looks for n0 <= N with l_n * num(c)^n <= n! * den(c)^n for every n0 <= n <= N;
/// reports the smallest such n0.
inline BoundReport check_factorial_upper(const IntSeq& l, const Rational& c) {
    detail::require_order(l);
    if (c <= 0) throw std::invalid_argument("factorial-upper needs c > 0");
    const std::size_t N = l.order();
    const BigInt a = detail::num(c), b = detail::den(c);
    BoundReport r;
    r.kind = BoundKind::factorial_upper;
    r.c = c;
    r.range_hi = N;

    std::vector<BigInt> fact = factorials(N);
    auto holds = [&](std::size_t n) {
        return l.values[n] * detail::ipow(a, n) <= fact[n] * detail::ipow(b, n);
    };
    std::size_t n = N + 1;
    while (n > 0 && holds(n - 1)) --n;
    if (n == N + 1) {
        r.pass = false;
        r.range_lo = N;
        r.first_fail = N;
    } else {
        r.pass = true;
        r.n0 = n;
        r.range_lo = n;
    }
    return r;
}

/// Passes iff some grid point with d < 1 satisfies l_n <= c n^{d n} for all 1 <= n <= N.
/// The reported (c, d) is the passing point with the smallest d (then smallest c);
/// on failure it is the point that held the longest.
inline BoundReport check_cellular_bound(const IntSeq& l, const std::vector<CellularPoint>& grid) {
    detail::require_order(l);
    const std::size_t N = l.order();
    BoundReport r;
    r.kind = BoundKind::cellular_bound;
    r.range_lo = 1;
    r.range_hi = N;

    std::size_t p_max = 0;
    for (std::size_t n = 2; n <= N; ++n) p_max = std::max(p_max, detail::smallest_percent_exponent(l.values[n], n));
    r.d_estimate = Rational(p_max, 100);

    std::vector<CellularPoint> sorted = grid;
    std::stable_sort(sorted.begin(), sorted.end(), [](const CellularPoint& x, const CellularPoint& y) {
        return x.d != y.d ? x.d < y.d : x.c < y.c;
    });

    std::optional<std::size_t> best_fail;
    for (const auto& pt : sorted) {
        if (pt.d >= 1 || pt.d < 0 || pt.c <= 0) continue;
        std::optional<std::size_t> fail;
        for (std::size_t n = 1; n <= N; ++n) {
            if (!detail::cellular_holds(l.values[n], n, pt.c, pt.d)) {
                fail = n;
                break;
            }
        }
        if (!fail) {
            r.pass = true;
            r.c = pt.c;
            r.d = pt.d;
            r.first_fail.reset();
            return r;
        }
        if (!best_fail || *fail > *best_fail) {
            best_fail = fail;
            r.c = pt.c;
            r.d = pt.d;
        }
    }
    r.pass = false;
    r.first_fail = best_fail.value_or(1);
    return r;
}

struct BoundParams {
    std::vector<CellularPoint> grid; // cellular-bound
    Rational c = 2;                  // factorial-upper
};

inline BoundReport check_bounds(const IntSeq& l, BoundKind kind, const BoundParams& params) {
    switch (kind) {
    case BoundKind::cellular_bound: return check_cellular_bound(l, params.grid);
    case BoundKind::bell_lower: return check_bell_lower(l);
    case BoundKind::factorial_upper: return check_factorial_upper(l, params.c);
    }
    throw std::invalid_argument("unknown bound kind");
}

} // namespace growthlab
