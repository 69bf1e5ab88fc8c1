#pragma once

// Truncated exponential generating functions with exact rational coefficients.
// Products model direct products of groups; composition into (f - 1) models
// wreath products, exp(f - 1) the wreath product with the infinite symmetric group.

#include "growthlab/numeric.hpp"
#include "growthlab/seq_core.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace growthlab {

/// to_seq hit a coefficient c_n with c_n * n! not a non-negative integer.
class integrality_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Composition needs c_0 = 1 on the inner series.
class composition_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Egf {
public:
    /// Zero series of order N.
    explicit Egf(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
    explicit Egf(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("Egf needs at least one coefficient");
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }
    bool operator==(const Egf&) const = default;

    static Egf one(std::size_t order) {
        Egf e(order);
        e.coeffs_[0] = 1;
        return e;
    }

    /// e^x truncated at order N (the all-ones sequence).
    static Egf exp_x(std::size_t order) { return from_seq(IntSeq(std::vector<BigInt>(order + 1, BigInt(1)))); }

    static Egf from_seq(const IntSeq& a) {
        if (a.values.empty()) throw std::invalid_argument("from_seq: empty sequence");
        std::vector<Rational> c(a.values.size());
        BigInt fact = 1;
        for (std::size_t n = 0; n < a.values.size(); ++n) {
            if (n > 1) fact *= n;
            c[n] = Rational(a.values[n], fact);
        }
        return Egf(std::move(c));
    }

    IntSeq to_seq(std::string label = {}) const {
        std::vector<BigInt> a(coeffs_.size());
        BigInt fact = 1;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (n > 1) fact *= n;
            Rational v = coeffs_[n] * fact;
            if (boost::multiprecision::denominator(v) != 1 || v < 0)
                throw integrality_error("coefficient " + std::to_string(n) + " times n! is " + growthlab::to_string(v) +
                                        ", not a non-negative integer");
            a[n] = boost::multiprecision::numerator(v);
        }
        return IntSeq(std::move(a), std::move(label));
    }

    /// Formal derivative, truncated to order N-1 (order 0 stays order 0).
    Egf derivative() const {
        if (order() == 0) return Egf(0);
        std::vector<Rational> d(order());
        for (std::size_t n = 1; n <= order(); ++n) d[n - 1] = coeffs_[n] * n;
        return Egf(std::move(d));
    }

    /// Drops coefficients above order M.
    Egf truncated(std::size_t m) const {
        if (m > order()) throw std::invalid_argument("truncated: order exceeds available coefficients");
        return Egf(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m) + 1));
    }

private:
    std::vector<Rational> coeffs_;
};

namespace detail {

inline void require_same_order(const Egf& f, const Egf& g, const char* op) {
    if (f.order() != g.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()) + ")");
}

inline void require_unit_constant(const Egf& f, const char* op) {
    if (f[0] != 1) throw composition_domain_error(std::string(op) + ": constant term must be 1");
}

} // namespace detail

/// Cauchy product truncated at N.
inline Egf egf_product(const Egf& f, const Egf& g) {
    detail::require_same_order(f, g, "egf_product");
    const std::size_t N = f.order();
    Egf r(N);
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if (f[k] == 0 || g[n - k] == 0) continue;
            acc += f[k] * g[n - k];
        }
        r[n] = std::move(acc);
    }
    return r;
}

/// f_H(f_G - 1) truncated at N, by Horner's scheme. Requires c_0(f_G) = 1.
inline Egf egf_wreath(const Egf& f_g, const Egf& f_h) {
    detail::require_same_order(f_g, f_h, "egf_wreath");
    detail::require_unit_constant(f_g, "egf_wreath");
    const std::size_t N = f_g.order();
    Egf inner = f_g;
    inner[0] = 0;
    Egf acc(N);
    acc[0] = f_h[N];
    for (std::size_t j = N; j-- > 0;) {
        acc = egf_product(acc, inner);
        acc[0] += f_h[j];
    }
    return acc;
}

/// exp(f - 1) truncated at N via h' = h f':  n h_n = sum_{k=1}^n k f_k h_{n-k}.
inline Egf egf_exp_shift(const Egf& f) {
    detail::require_unit_constant(f, "egf_exp_shift");
    const std::size_t N = f.order();
    Egf h(N);
    h[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] == 0) continue;
            acc += f[k] * k * h[n - k];
        }
        h[n] = acc / n;
    }
    return h;
}

} // namespace growthlab
