#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "modrep/dimvec.hpp"

namespace modrep {

/// A splitting alpha = beta + gamma into dimension vectors of a submodule and
/// a quotient, both balanced and nonzero.
struct Decomposition {
    DimVector beta;
    DimVector gamma;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

namespace detail {
inline void require_balanced(const DimVector& v, const char* who) {
    if (!v.balanced())
        throw std::invalid_argument(std::string(who) + ": unbalanced vector " + v.to_text());
}
}  // namespace detail

/// dim Ext^1 between simples of dimension vectors beta, gamma:
/// dim Hom - <beta,gamma>, with dim Hom = 1 for isomorphic Schur modules and
/// 0 for non-isomorphic simples.
inline long long ext1_dim_simples(const DimVector& beta, const DimVector& gamma,
                                  bool isomorphic) {
    detail::require_balanced(beta, "ext1_dim_simples");
    detail::require_balanced(gamma, "ext1_dim_simples");
    return (isomorphic ? 1 : 0) - euler_form(beta, gamma);
}

/// Tangent dimension of deformations preserving a non-split extension of
/// simples W (beta) by V (gamma): 1 - <beta+gamma, beta+gamma> + <beta,gamma>.
inline long long deformation_tangent_dim(const DimVector& beta, const DimVector& gamma) {
    detail::require_balanced(beta, "deformation_tangent_dim");
    detail::require_balanced(gamma, "deformation_tangent_dim");
    const DimVector alpha = beta + gamma;
    return 1 - euler_form(alpha, alpha) + euler_form(beta, gamma);
}

/// Codimension of the non-simple locus at such an extension: -<beta,gamma>.
inline long long codim_nonsimple(const DimVector& beta, const DimVector& gamma) {
    detail::require_balanced(beta, "codim_nonsimple");
    detail::require_balanced(gamma, "codim_nonsimple");
    return -euler_form(beta, gamma);
}

/// Minimum of codim_nonsimple(beta, gamma) over all decompositions
/// alpha = beta + gamma with both parts nonzero and admissible and a
/// non-split extension available, i.e. dim Ext^1 = -<gamma,beta> >= 1; a pair
/// with vanishing Ext^1 admits only the split module, which is not an
/// indecomposable extension and carries no codimension stratum. Returns the
/// first minimizing decomposition in lexicographic gamma order (then beta,
/// which gamma determines); that order makes the witness for (2,2,2;3,3) the
/// canonical beta=(2,2,1;3,2), gamma=(0,0,1;0,1).
inline std::pair<long long, Decomposition> min_codim(const DimVector& alpha) {
    if (!westbury_conditions(alpha))
        throw std::invalid_argument("min_codim: alpha fails conditions (i)-(ii): " + alpha.to_text());
    if (alpha.total() < 2)
        throw std::invalid_argument("min_codim: |alpha| must be at least 2");

    std::optional<long long> best;
    std::optional<Decomposition> witness;
    for (long long a1 = 0; a1 <= alpha.a1; ++a1)
        for (long long a2 = 0; a2 <= alpha.a2; ++a2)
            for (long long a3 = 0; a3 <= alpha.a3; ++a3)
                for (long long b1 = 0; b1 <= alpha.b1; ++b1)
                    for (long long b2 = 0; b2 <= alpha.b2; ++b2) {
                        const DimVector gamma{a1, a2, a3, b1, b2};
                        if (gamma.is_zero() || gamma == alpha) continue;
                        if (!westbury_conditions(gamma)) continue;
                        const DimVector beta = alpha - gamma;
                        if (!westbury_conditions(beta)) continue;
                        const long long c = codim_nonsimple(beta, gamma);
                        if (c < 1) continue;  // split-only pair, no extension stratum
                        if (!best || c < *best) {
                            best = c;
                            witness = Decomposition{beta, gamma};
                        }
                    }
    if (!best)
        throw std::domain_error("min_codim: no extension decomposition of " + alpha.to_text());
    return {*best, *witness};
}

}  // namespace modrep
