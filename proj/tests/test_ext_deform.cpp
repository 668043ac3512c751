#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <random>
#include <vector>

#include "modrep/ext_deform.hpp"
#include "modrep/series.hpp"

using modrep::codim_nonsimple;
using modrep::codim_sequence;
using modrep::Decomposition;
using modrep::deformation_tangent_dim;
using modrep::DimVector;
using modrep::enumerate_admissible;
using modrep::euler_form;
using modrep::ext1_dim_simples;
using modrep::max_simp_dim;
using modrep::min_codim;
using modrep::westbury_conditions;
using modrep::westbury_dim;

namespace {

std::mt19937 rng(315001);

DimVector random_balanced(long long cap = 4) {
    std::uniform_int_distribution<long long> d(0, cap);
    const long long a1 = d(rng), a2 = d(rng), a3 = d(rng);
    std::uniform_int_distribution<long long> split(0, a1 + a2 + a3);
    const long long b1 = split(rng);
    return {a1, a2, a3, b1, a1 + a2 + a3 - b1};
}

/// All six unit dimension vectors (the one-dimensional simples).
std::vector<DimVector> unit_vectors() {
    std::vector<DimVector> units;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) {
            DimVector v;
            (i == 0 ? v.a1 : i == 1 ? v.a2 : v.a3) = 1;
            (j == 0 ? v.b1 : v.b2) = 1;
            units.push_back(v);
        }
    return units;
}

}  // namespace

TEST_CASE("Ext^1 between one-dimensional simples") {
    const DimVector k11{1, 0, 0, 1, 0};   // x -> 1, y -> +1
    const DimVector kw_m{0, 1, 0, 0, 1};  // x -> w, y -> -1
    const DimVector kw_p{0, 1, 0, 1, 0};  // x -> w, y -> +1

    CHECK(ext1_dim_simples(k11, k11, true) == 0);    // rigid point
    CHECK(ext1_dim_simples(k11, kw_m, false) == 1);  // both eigenvalues differ
    CHECK(ext1_dim_simples(k11, kw_p, false) == 0);  // y-eigenvalue shared
    CHECK_THROWS_AS(ext1_dim_simples(DimVector{1, 0, 0, 0, 0}, k11, false),
                    std::invalid_argument);
}

TEST_CASE("the full 6x6 Ext table of one-dimensional simples") {
    const auto units = unit_vectors();
    for (const DimVector& b : units)
        for (const DimVector& g : units) {
            const bool same = b == g;
            const bool x_differs = !(b.a1 == g.a1 && b.a2 == g.a2 && b.a3 == g.a3);
            const bool y_differs = !(b.b1 == g.b1 && b.b2 == g.b2);
            const long long expected = (!same && x_differs && y_differs) ? 1 : 0;
            CHECK(ext1_dim_simples(b, g, same) == expected);
        }
}

TEST_CASE("constrained deformation tangent dimension") {
    CHECK(deformation_tangent_dim({2, 2, 1, 3, 2}, {0, 0, 1, 0, 1}) == 5);
    CHECK(deformation_tangent_dim({1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}) == 0);
    CHECK_THROWS_AS(deformation_tangent_dim(DimVector{1, 1, 0, 1, 0}, DimVector{0, 0, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("codimension of the non-simple locus") {
    CHECK(codim_nonsimple({2, 2, 1, 3, 2}, {0, 0, 1, 0, 1}) == 2);
    CHECK(codim_nonsimple({0, 0, 1, 0, 1}, {2, 2, 1, 3, 2}) == 2);  // swapped order, computed value
    CHECK(codim_nonsimple({1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}) == 1);
}

TEST_CASE("tangent + codimension recovers the total dimension") {
    for (int trial = 0; trial < 200; ++trial) {
        const DimVector beta = random_balanced(), gamma = random_balanced();
        const DimVector alpha = beta + gamma;
        CHECK(deformation_tangent_dim(beta, gamma) + codim_nonsimple(beta, gamma) ==
              1 - euler_form(alpha, alpha));
        if (westbury_conditions(alpha))
            CHECK(deformation_tangent_dim(beta, gamma) + codim_nonsimple(beta, gamma) ==
                  westbury_dim(alpha));
    }
}

TEST_CASE("minimal codimension of the worked 6-dimensional example") {
    const auto [codim, witness] = min_codim({2, 2, 2, 3, 3});
    CHECK(codim == 2);
    CHECK(witness.beta == DimVector{2, 2, 1, 3, 2});
    CHECK(witness.gamma == DimVector{0, 0, 1, 0, 1});
}

TEST_CASE("minimal codimension of the 2-dimensional components") {
    const auto [codim, witness] = min_codim({1, 1, 0, 1, 1});
    CHECK(codim == 1);
    // Two one-dimensional simples with both eigenvalues distinct.
    CHECK(witness.beta + witness.gamma == DimVector{1, 1, 0, 1, 1});
    CHECK(witness.beta.total() == 1);
    CHECK(witness.gamma.total() == 1);
}

TEST_CASE("min_codim input validation") {
    CHECK_THROWS_AS(min_codim({1, 0, 0, 1, 0}), std::invalid_argument);   // |alpha| < 2
    CHECK_THROWS_AS(min_codim({2, 0, 0, 1, 1}), std::invalid_argument);   // not admissible
}

TEST_CASE("min_codim is at least 1 whenever a decomposition exists") {
    for (long long n = 2; n <= 8; ++n)
        for (const DimVector& alpha : enumerate_admissible(n)) {
            long long codim;
            Decomposition witness;
            try {
                std::tie(codim, witness) = min_codim(alpha);
            } catch (const std::domain_error&) {
                continue;  // no extension decomposition at all (e.g. (2,2,0;2,2))
            }
            CHECK(codim >= 1);
            CHECK(witness.beta + witness.gamma == alpha);
            CHECK(westbury_conditions(witness.beta));
            CHECK(westbury_conditions(witness.gamma));
        }
}

TEST_CASE("alpha with only split pairings has no minimum") {
    // Every two-part splitting of (2,2,0;2,2) either has an inadmissible part
    // or is the equal pair (1,1,0;1,1) + (1,1,0;1,1) with vanishing Ext^1.
    CHECK_THROWS_AS(min_codim({2, 2, 0, 2, 2}), std::domain_error);
}

TEST_CASE("on maximal components the minimum matches the floor formula") {
    for (long long n = 2; n <= 10; ++n) {
        const long long expected = codim_sequence(n);
        for (const DimVector& alpha : enumerate_admissible(n)) {
            if (westbury_dim(alpha) != max_simp_dim(n)) continue;
            CHECK(min_codim(alpha).first == expected);
        }
    }
}

TEST_CASE("the minimum is attained with a one-dimensional part") {
    for (long long n = 2; n <= 10; ++n)
        for (const DimVector& alpha : enumerate_admissible(n)) {
            if (westbury_dim(alpha) != max_simp_dim(n)) continue;
            const auto [overall, witness] = min_codim(alpha);

            long long best_unit = -1;
            for (const DimVector& gamma : unit_vectors()) {
                if (gamma.a1 > alpha.a1 || gamma.a2 > alpha.a2 || gamma.a3 > alpha.a3 ||
                    gamma.b1 > alpha.b1 || gamma.b2 > alpha.b2)
                    continue;
                const DimVector beta = alpha - gamma;
                if (!westbury_conditions(beta)) continue;
                const long long c = codim_nonsimple(beta, gamma);
                if (best_unit < 0 || c < best_unit) best_unit = c;
            }
            REQUIRE(best_unit >= 0);
            CHECK(best_unit == overall);
        }
}
