#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modrep/dimvec.hpp"
#include "modrep/rational.hpp"

namespace modrep {

/// Truncated formal power series over Q: coefficients for x^0 .. x^N.
/// Addition, multiplication and reciprocals are exact up to the truncation
/// order; mixing orders truncates to the shorter one.
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1) {}

    static Series polynomial(std::vector<Rational> coeffs, std::size_t order) {
        Series s(order);
        for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i)
            s.c_[i] = std::move(coeffs[i]);
        return s;
    }

    [[nodiscard]] std::size_t order() const { return c_.size() - 1; }

    /// Coefficient of x^n; zero beyond the truncation order.
    [[nodiscard]] const Rational& coeff(std::size_t n) const {
        static const Rational zero;
        return n < c_.size() ? c_[n] : zero;
    }

    Rational& coeff(std::size_t n) {
        if (n >= c_.size()) throw std::out_of_range("Series: coefficient beyond order");
        return c_[n];
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    /// Multiplicative inverse up to the truncation order; the constant term
    /// must be nonzero.
    [[nodiscard]] Series reciprocal() const {
        if (c_[0].is_zero())
            throw std::domain_error("Series: reciprocal requires nonzero constant term");
        Series r(order());
        const Rational inv0 = c_[0].inverse();
        r.c_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            Rational acc;
            for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = -inv0 * acc;
        }
        return r;
    }

    [[nodiscard]] Series truncate(std::size_t new_order) const {
        Series r(new_order);
        for (std::size_t n = 0; n <= new_order && n <= order(); ++n) r.c_[n] = c_[n];
        return r;
    }

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }

private:
    std::vector<Rational> c_;
};

/// Exact Taylor expansion of num(x)/den(x) to the given order; den must have
/// a nonzero constant term.
inline Series expand_rational(std::vector<Rational> num, std::vector<Rational> den,
                              std::size_t order) {
    if (den.empty() || den[0].is_zero())
        throw std::domain_error("expand_rational: denominator has zero constant term");
    const Series n = Series::polynomial(std::move(num), order);
    const Series d = Series::polynomial(std::move(den), order);
    return n * d.reciprocal();
}

inline std::vector<Rational> to_rationals(std::initializer_list<long> coeffs) {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (long c : coeffs) out.emplace_back(c);
    return out;
}

/// Generating function of the maximal component dimensions:
/// (t^2 + 2t^6 - 2t^7 + t^8) / ((1-t)^2 (1-t^6)).
inline Series max_simp_dim_series(std::size_t order) {
    return expand_rational(to_rationals({0, 0, 1, 0, 0, 0, 2, -2, 1}),
                           to_rationals({1, -2, 1, 0, 0, 0, -1, 2, -1}), order);
}

/// True iff the coefficients of the closed generating function agree with
/// max_simp_dim(n) for 1 <= n <= N.
inline bool maxdim_gf_check(std::size_t N) {
    if (N < 1) throw std::invalid_argument("maxdim_gf_check: order must be positive");
    const Series s = max_simp_dim_series(N);
    for (std::size_t n = 1; n <= N; ++n)
        if (s.coeff(n) != Rational(max_simp_dim(static_cast<long long>(n)))) return false;
    return true;
}

/// Minimal codimension of the non-simple locus on the maximal component:
/// n - 1 - [(n-1)/3] - [(n-1)/2].
inline long long codim_sequence(long long n) {
    if (n < 1) throw std::invalid_argument("codim_sequence: n must be positive");
    return (n - 1) - (n - 1) / 3 - (n - 1) / 2;
}

/// Dimension generating function of the modular-forms algebra:
/// 1/((1-x^2)(1-x^3)), without the constant term dropped.
inline Series modular_forms_series(std::size_t order) {
    return expand_rational(to_rationals({1}), to_rationals({1, 0, -1, -1, 0, 1}), order);
}

/// True iff codim_sequence(n) equals the coefficient of x^n in
/// 1/((1-x^2)(1-x^3)) - 1 for 1 <= n <= N.
inline bool modular_forms_identity_check(std::size_t N) {
    if (N < 1) throw std::invalid_argument("modular_forms_identity_check: order must be positive");
    const Series f = modular_forms_series(N);
    for (std::size_t n = 1; n <= N; ++n)
        if (f.coeff(n) != Rational(codim_sequence(static_cast<long long>(n)))) return false;
    return true;
}

/// g(x) = prod_i (1 + x + ... + x^{a_i}) for balanced alpha; the coefficient
/// of x^{b1} counts the maximally iterated extensions.
inline Series mie_gf_poly(const DimVector& alpha) {
    if (!alpha.balanced())
        throw std::invalid_argument("mie_gf_poly: alpha must be balanced");
    const std::size_t deg = static_cast<std::size_t>(alpha.x_total());
    Series g = Series::polynomial(to_rationals({1}), deg);
    for (long long a : {alpha.a1, alpha.a2, alpha.a3}) {
        std::vector<Rational> ones(static_cast<std::size_t>(a) + 1, Rational(1));
        g = g * Series::polynomial(std::move(ones), deg);
    }
    return g;
}

}  // namespace modrep
