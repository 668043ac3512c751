#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modrep/cyclotomic.hpp"
#include "modrep/dimvec.hpp"
#include "modrep/matrix.hpp"
#include "modrep/series.hpp"

namespace modrep {

/// chi(1) = 1, chi(n) = sum_{i=1}^{n-1} chi(i) chi(n-i): the Catalan numbers
/// shifted by one, chi(n) = C_{n-1}. Computed iteratively per call (no shared
/// state); addition is overflow-checked, which admits n up to 38.
inline std::uint64_t chi(unsigned n) {
    if (n == 0) throw std::invalid_argument("chi: defined for n >= 1");
    std::vector<std::uint64_t> c(n + 1, 0);
    c[1] = 1;
    for (unsigned m = 2; m <= n; ++m) {
        std::uint64_t acc = 0;
        for (unsigned i = 1; i < m; ++i) {
            std::uint64_t term, sum;
            if (__builtin_mul_overflow(c[i], c[m - i], &term) ||
                __builtin_add_overflow(acc, term, &sum))
                throw std::overflow_error("chi: value exceeds 64 bits");
            acc = sum;
        }
        c[m] = acc;
    }
    return c[n];
}

namespace detail {
inline void require_admissible(const DimVector& alpha, const char* who) {
    if (!westbury_conditions(alpha))
        throw std::invalid_argument(std::string(who) + ": alpha fails conditions (i)-(ii): " +
                                    alpha.to_text());
}
}  // namespace detail

/// Number of maximally iterated extensions with dimension vector alpha, via
/// the closed form N = (n + d + 1)/2. An even n + d cannot happen for
/// admissible alpha and signals an internal inconsistency.
inline long long mie_count_closed(const DimVector& alpha) {
    detail::require_admissible(alpha, "mie_count_closed");
    const long long n = alpha.total();
    const long long d = westbury_dim(alpha);
    if ((n + d) % 2 != 1)
        throw std::runtime_error("mie_count_closed: n + d is even for " + alpha.to_text());
    return (n + d + 1) / 2;
}

/// The same count by brute force: semi-simplifications are pinned down by
/// (c1,c2,c3) with 0 <= c_i <= a_i and c1+c2+c3 = b1, counted directly.
inline long long mie_count_enumerate(const DimVector& alpha) {
    detail::require_admissible(alpha, "mie_count_enumerate");
    long long count = 0;
    for (long long c1 = 0; c1 <= alpha.a1; ++c1)
        for (long long c2 = 0; c2 <= alpha.a2; ++c2)
            for (long long c3 = 0; c3 <= alpha.a3; ++c3)
                if (c1 + c2 + c3 == alpha.b1) ++count;
    return count;
}

/// The same count a third way: the coefficient of x^{b1} in
/// g(x) = prod_i (1 + x + ... + x^{a_i}). The coefficient is well defined for
/// any balanced alpha; agreement with the other two counts is only promised
/// on admissible input.
inline long long mie_count_gf(const DimVector& alpha) {
    if (!alpha.balanced())
        throw std::invalid_argument("mie_count_gf: alpha must be balanced");
    const Series g = mie_gf_poly(alpha);
    const Rational c = g.coeff(static_cast<std::size_t>(alpha.b1));
    if (!c.is_integer())
        throw std::runtime_error("mie_count_gf: non-integer coefficient");
    return c.numerator().get_si();
}

/// Diagonal of an upper triangular involution: the Y-eigenvalue (+1/-1) of
/// each one-dimensional composition factor, in composition order.
using SignPattern = std::vector<int>;

namespace detail {
inline void require_pattern(const SignPattern& pattern, const char* who) {
    if (pattern.empty())
        throw std::invalid_argument(std::string(who) + ": empty sign pattern");
    for (int s : pattern)
        if (s != 1 && s != -1)
            throw std::invalid_argument(std::string(who) + ": signs must be +1 or -1");
}
}  // namespace detail

/// Positions (i,j), i < j, with opposite diagonal signs: exactly the freely
/// choosable entries of an upper triangular involution with this diagonal.
/// 0-based, sorted lexicographically. Their number is always b1 * b2.
inline std::vector<std::pair<int, int>> free_positions(const SignPattern& pattern) {
    detail::require_pattern(pattern, "free_positions");
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(pattern.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pattern[i] != pattern[j]) out.emplace_back(i, j);
    return out;
}

/// The chain set P(i,k) for equal-sign endpoints i < k (0-based): all strictly
/// increasing index chains i = i_0 < i_1 < ... < i_m < i_{m+1} = k whose signs
/// alternate along the chain. Alternation with equal endpoint signs forces the
/// interior count m to be odd. Each chain is returned with its endpoints.
inline std::vector<std::vector<int>> chain_set(const SignPattern& pattern, int i, int k) {
    detail::require_pattern(pattern, "chain_set");
    const int n = static_cast<int>(pattern.size());
    if (i < 0 || k >= n || i >= k)
        throw std::invalid_argument("chain_set: need 0 <= i < k < n");
    if (pattern[i] != pattern[k])
        throw std::invalid_argument("chain_set: endpoints must carry equal signs");

    std::vector<std::vector<int>> chains;
    std::vector<int> path{i};
    const auto extend = [&](auto&& self, int last) -> void {
        for (int next = last + 1; next <= k; ++next) {
            if (pattern[next] == pattern[last]) continue;
            if (next == k) continue;  // k only enters as the closing element below
            path.push_back(next);
            if (pattern[next] != pattern[k]) {
                // the closing step next -> k alternates, completing a chain
                path.push_back(k);
                chains.push_back(path);
                path.pop_back();
            }
            self(self, next);
            path.pop_back();
        }
    };
    extend(extend, i);
    return chains;
}

namespace detail {
inline void require_free_entries(const SignPattern& pattern,
                                 const std::map<std::pair<int, int>, Cyclotomic>& free,
                                 const char* who) {
    const auto expected = free_positions(pattern);
    if (free.size() != expected.size())
        throw std::invalid_argument(std::string(who) + ": wrong number of free entries");
    auto it = free.begin();  // std::map iterates keys in the same lexicographic order
    for (const auto& pos : expected) {
        if (it->first != pos)
            throw std::invalid_argument(std::string(who) + ": free-entry positions do not match");
        ++it;
    }
}
}  // namespace detail

/// A point of the involution space: the prescribed diagonal (sign pattern)
/// together with values for the freely choosable entries, one per position
/// pair with opposite signs. Both involution constructions consume this data.
struct InvolutionSpec {
    SignPattern pattern;
    std::map<std::pair<int, int>, Cyclotomic> free_entries;
};

/// The unique upper triangular Y with the given diagonal and free entries
/// satisfying Y^2 = I, filled by forward substitution in increasing k - i
/// order: for equal signs, (y_ii + y_kk) y_ik = -sum_j y_ij y_jk pins y_ik;
/// for opposite signs the same sum vanishes identically and y_ik is free.
/// Y^2 = I is asserted exactly before returning.
inline Matrix involution_forward(const SignPattern& pattern,
                                 const std::map<std::pair<int, int>, Cyclotomic>& free) {
    detail::require_pattern(pattern, "involution_forward");
    detail::require_free_entries(pattern, free, "involution_forward");
    const std::size_t n = pattern.size();

    Matrix y(n, n);
    for (std::size_t i = 0; i < n; ++i) y.at(i, i) = Cyclotomic(pattern[i]);
    for (const auto& [pos, value] : free)
        y.at(static_cast<std::size_t>(pos.first), static_cast<std::size_t>(pos.second)) = value;

    const Cyclotomic minus_half{Rational(-1, 2)};
    for (std::size_t span = 2; span < n; ++span) {
        for (std::size_t i = 0; i + span < n; ++i) {
            const std::size_t k = i + span;
            if (pattern[i] != pattern[k]) continue;
            Cyclotomic acc;
            for (std::size_t j = i + 1; j < k; ++j) acc += y.at(i, j) * y.at(j, k);
            y.at(i, k) = minus_half * Cyclotomic(pattern[i]) * acc;
        }
    }
    if (!(y * y == Matrix::identity(n)))
        throw std::runtime_error("involution_forward: Y^2 = I failed");
    return y;
}

/// The same involution through the closed chain-sum form: for equal signs,
///
///   y_ik = sum over P(i,k) of (-y_ii) * chi(nu+1)/2^m * prod y_{i_s, i_{s+1}}
///
/// with m = 2nu + 1 the interior length of the chain. The chain factors are
/// all free entries (consecutive chain signs are opposite). The coefficient
/// chi(nu+1)/2^m = Catalan(nu)/2^m is the normalization that matches forward
/// substitution: 1/2, 1/8, 2/32, 5/128 for m = 1, 3, 5, 7.
inline Matrix involution_closed(const SignPattern& pattern,
                                const std::map<std::pair<int, int>, Cyclotomic>& free) {
    detail::require_pattern(pattern, "involution_closed");
    detail::require_free_entries(pattern, free, "involution_closed");
    const std::size_t n = pattern.size();

    Matrix y(n, n);
    for (std::size_t i = 0; i < n; ++i) y.at(i, i) = Cyclotomic(pattern[i]);
    for (const auto& [pos, value] : free)
        y.at(static_cast<std::size_t>(pos.first), static_cast<std::size_t>(pos.second)) = value;

    for (int i = 0; i + 1 < static_cast<int>(n); ++i) {
        for (int k = i + 1; k < static_cast<int>(n); ++k) {
            if (pattern[i] != pattern[k]) continue;
            Cyclotomic acc;
            for (const auto& chain : chain_set(pattern, i, k)) {
                const unsigned m = static_cast<unsigned>(chain.size()) - 2;
                const unsigned nu = (m - 1) / 2;
                Cyclotomic term{Rational(-pattern[i])};
                term *= Cyclotomic(Rational(mpz_class(static_cast<unsigned long>(chi(nu + 1))),
                                            mpz_class(1) << m));
                for (std::size_t s = 0; s + 1 < chain.size(); ++s)
                    term *= y.at(static_cast<std::size_t>(chain[s]),
                                 static_cast<std::size_t>(chain[s + 1]));
                acc += term;
            }
            y.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = acc;
        }
    }
    return y;
}

inline Matrix involution_forward(const InvolutionSpec& spec) {
    return involution_forward(spec.pattern, spec.free_entries);
}

inline Matrix involution_closed(const InvolutionSpec& spec) {
    return involution_closed(spec.pattern, spec.free_entries);
}

/// dim Y(Gamma) = b1 * b2 = (n^2 - b1^2 - b2^2)/2: the number of free entries
/// of an upper triangular involution with eigenvalue multiplicities (b1, b2),
/// independent of the ordering.
inline long long involution_space_dim(const DimVector& alpha) {
    if (!alpha.balanced())
        throw std::invalid_argument("involution_space_dim: alpha must be balanced");
    return alpha.b1 * alpha.b2;
}

/// dim of the stabilizer of a diagonal X with eigenvalue multiplicities
/// (a1,a2,a3): the block group GL-commutant has dimension a1^2 + a2^2 + a3^2.
inline long long stabilizer_dim(long long a1, long long a2, long long a3) {
    for (long long a : {a1, a2, a3})
        if (a < 0 || a > DimVector::kMaxComponent)
            throw std::invalid_argument("stabilizer_dim: multiplicities must be in [0, cap]");
    return a1 * a1 + a2 * a2 + a3 * a3;
}

/// Dimension data of the correspondence between indecomposables with
/// representation graph Gamma and the involution space modulo the stabilizer:
/// dim Y(Gamma), dim G_X and the free positions. The quotient itself is not
/// computed.
struct IndGammaSummary {
    long long dim_y;
    long long dim_gx;
    std::vector<std::pair<int, int>> free_positions;
};

inline IndGammaSummary ind_gamma_summary(const DimVector& alpha, const SignPattern& pattern) {
    detail::require_pattern(pattern, "ind_gamma_summary");
    if (!alpha.balanced())
        throw std::invalid_argument("ind_gamma_summary: alpha must be balanced");
    long long plus = 0, minus = 0;
    for (int s : pattern) (s == 1 ? plus : minus)++;
    if (plus != alpha.b1 || minus != alpha.b2)
        throw std::invalid_argument("ind_gamma_summary: pattern multiplicities do not match alpha");
    if (static_cast<long long>(pattern.size()) != alpha.total())
        throw std::invalid_argument("ind_gamma_summary: pattern length does not match |alpha|");
    return {involution_space_dim(alpha),
            stabilizer_dim(alpha.a1, alpha.a2, alpha.a3),
            free_positions(pattern)};
}

/// Parses "+-+", "+,-,+" or "1,-1,1" into a sign pattern.
inline SignPattern parse_sign_pattern(const std::string& text) {
    SignPattern out;
    std::string token;
    const auto flush = [&] {
        if (token.empty()) return;
        if (token == "+" || token == "+1" || token == "1") out.push_back(1);
        else if (token == "-" || token == "-1") out.push_back(-1);
        else throw std::invalid_argument("sign pattern: bad token '" + token + "'");
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') { flush(); continue; }
        if ((c == '+' || c == '-') && (token == "+" || token == "-")) flush();
        token.push_back(c);
    }
    flush();
    if (out.empty()) throw std::invalid_argument("sign pattern: empty");
    return out;
}

inline std::string sign_pattern_to_string(const SignPattern& pattern) {
    std::string s;
    for (int v : pattern) s.push_back(v == 1 ? '+' : '-');
    return s;
}

}  // namespace modrep
