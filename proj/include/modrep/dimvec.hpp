#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modrep {

/// Dimension vector (a1,a2,a3; b1,b2) for the quiver K(3,2): eigenspace
/// dimensions of X for eigenvalues 1, w, w^2 and of Y for eigenvalues +1, -1.
struct DimVector {
    static constexpr long long kMaxComponent = 1'000'000;

    long long a1 = 0, a2 = 0, a3 = 0;
    long long b1 = 0, b2 = 0;

    DimVector() = default;
    DimVector(long long a1_, long long a2_, long long a3_, long long b1_, long long b2_)
        : a1(a1_), a2(a2_), a3(a3_), b1(b1_), b2(b2_) {
        for (long long c : {a1, a2, a3, b1, b2}) {
            if (c < 0) throw std::invalid_argument("DimVector: negative component");
            if (c > kMaxComponent) throw std::invalid_argument("DimVector: component exceeds cap");
        }
    }

    [[nodiscard]] long long x_total() const { return a1 + a2 + a3; }
    [[nodiscard]] long long y_total() const { return b1 + b2; }
    [[nodiscard]] bool balanced() const { return x_total() == y_total(); }
    [[nodiscard]] bool is_zero() const { return x_total() == 0 && y_total() == 0; }

    /// Total dimension n; only meaningful for balanced vectors.
    [[nodiscard]] long long total() const {
        if (!balanced()) throw std::invalid_argument("DimVector: total of unbalanced vector");
        return x_total();
    }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend std::strong_ordering operator<=>(const DimVector&, const DimVector&) = default;

    friend DimVector operator+(const DimVector& x, const DimVector& y) {
        return {x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.b1 + y.b1, x.b2 + y.b2};
    }

    /// Componentwise difference; throws if any component would go negative.
    friend DimVector operator-(const DimVector& x, const DimVector& y) {
        return {x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3, x.b1 - y.b1, x.b2 - y.b2};
    }

    [[nodiscard]] std::string to_text() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) +
               ";" + std::to_string(b1) + "," + std::to_string(b2) + ")";
    }

    /// Parses "(a1,a2,a3;b1,b2)"; the parentheses are optional.
    static DimVector parse(std::string_view text);
};

/// theta(alpha) = (b1 + b2) - (a1 + a2 + a3), the stability character.
inline long long theta(const DimVector& alpha) {
    return alpha.y_total() - alpha.x_total();
}

/// Euler form <alpha,beta> = sum a_i b_i + sum a'_j b'_j - |alpha|_x |beta|_x.
inline long long euler_form(const DimVector& alpha, const DimVector& beta) {
    return alpha.a1 * beta.a1 + alpha.a2 * beta.a2 + alpha.a3 * beta.a3 +
           alpha.b1 * beta.b1 + alpha.b2 * beta.b2 -
           alpha.x_total() * beta.x_total();
}

/// Admissibility for a simple module of dimension vector alpha:
/// (i) balance, and (ii) a_i + b_j <= n for all i, j when n >= 2.
/// In dimension 1 condition (ii) is vacuous -- the forced common eigenvector
/// it guards against is the whole module, not a proper submodule -- and the
/// six unit vectors are exactly the one-dimensional simples.
inline bool westbury_conditions(const DimVector& alpha) {
    if (!alpha.balanced()) return false;
    const long long n = alpha.x_total();
    if (n < 1) return false;
    if (n == 1) return true;
    for (long long a : {alpha.a1, alpha.a2, alpha.a3})
        for (long long b : {alpha.b1, alpha.b2})
            if (a + b > n) return false;
    return true;
}

/// dim Simp_alpha = 1 + n^2 - sum a_i^2 - sum b_j^2 for admissible alpha.
inline long long westbury_dim(const DimVector& alpha) {
    if (!westbury_conditions(alpha))
        throw std::invalid_argument("westbury_dim: conditions (i)-(ii) violated for " + alpha.to_text());
    const long long n = alpha.x_total();
    return 1 + n * n -
           (alpha.a1 * alpha.a1 + alpha.a2 * alpha.a2 + alpha.a3 * alpha.a3) -
           (alpha.b1 * alpha.b1 + alpha.b2 * alpha.b2);
}

/// Largest dimension among the components of Simp_n:
/// 6m^2 + 2sm + s - 1 for n = 6m + s (s = 1..5), and 6m^2 + 1 for n = 6m.
inline long long max_simp_dim(long long n) {
    if (n < 1) throw std::invalid_argument("max_simp_dim: n must be positive");
    if (n > DimVector::kMaxComponent) throw std::invalid_argument("max_simp_dim: n exceeds cap");
    const long long m = n / 6, s = n % 6;
    if (s == 0) return 6 * m * m + 1;
    return 6 * m * m + 2 * s * m + s - 1;
}

/// All admissible alpha with |alpha| = n, in lexicographic order
/// (a1,a2,a3,b1,b2). Deterministic.
inline std::vector<DimVector> enumerate_admissible(long long n) {
    if (n < 1) throw std::invalid_argument("enumerate_admissible: n must be positive");
    if (n > DimVector::kMaxComponent) throw std::invalid_argument("enumerate_admissible: n exceeds cap");
    std::vector<DimVector> out;
    for (long long a1 = 0; a1 <= n; ++a1)
        for (long long a2 = 0; a2 + a1 <= n; ++a2) {
            const long long a3 = n - a1 - a2;
            for (long long b1 = 0; b1 <= n; ++b1) {
                const DimVector alpha{a1, a2, a3, b1, n - b1};
                if (westbury_conditions(alpha)) out.push_back(alpha);
            }
        }
    return out;
}

inline DimVector DimVector::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

    const std::size_t semi = s.find(';');
    if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
        throw std::invalid_argument("DimVector: expected (a1,a2,a3;b1,b2)");

    const auto split = [](const std::string& part) {
        std::vector<long long> vals;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= part.size(); ++i) {
            if (i != part.size() && part[i] != ',') continue;
            const std::string tok = part.substr(start, i - start);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("DimVector: malformed component '" + tok + "'");
            if (tok.size() > 7) throw std::invalid_argument("DimVector: component exceeds cap");
            vals.push_back(std::stoll(tok));
            start = i + 1;
        }
        return vals;
    };
    const auto xs = split(s.substr(0, semi));
    const auto ys = split(s.substr(semi + 1));
    if (xs.size() != 3 || ys.size() != 2)
        throw std::invalid_argument("DimVector: expected (a1,a2,a3;b1,b2)");
    return {xs[0], xs[1], xs[2], ys[0], ys[1]};
}

}  // namespace modrep
