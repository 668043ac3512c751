#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "modrep/series.hpp"

using modrep::codim_sequence;
using modrep::DimVector;
using modrep::expand_rational;
using modrep::max_simp_dim;
using modrep::maxdim_gf_check;
using modrep::mie_gf_poly;
using modrep::modular_forms_identity_check;
using modrep::modular_forms_series;
using modrep::Rational;
using modrep::Series;
using modrep::to_rationals;

namespace {

std::mt19937 rng(46091);

Series random_unit_series(std::size_t order) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    Series s(order);
    s.coeff(0) = Rational(coeff(rng) * 2 + 1);  // nonzero constant term
    for (std::size_t n = 1; n <= order; ++n) s.coeff(n) = Rational(coeff(rng));
    return s;
}

void check_coeffs(const Series& s, const std::vector<long>& expected) {
    REQUIRE(s.order() + 1 >= expected.size());
    for (std::size_t n = 0; n < expected.size(); ++n) CHECK(s.coeff(n) == Rational(expected[n]));
}

}  // namespace

TEST_CASE("geometric series") {
    check_coeffs(expand_rational(to_rationals({1}), to_rationals({1, -1}), 4), {1, 1, 1, 1, 1});
}

TEST_CASE("expansion of 1/((1-x^2)(1-x^3))") {
    check_coeffs(modular_forms_series(8), {1, 0, 1, 1, 1, 1, 2, 1, 2});
}

TEST_CASE("expansion of the maximal-dimension generating function") {
    const Series s = expand_rational(to_rationals({0, 0, 1, 0, 0, 0, 2, -2, 1}),
                                     to_rationals({1, -2, 1, 0, 0, 0, -1, 2, -1}), 8);
    check_coeffs(s, {0, 0, 1, 2, 3, 4, 7, 8, 11});
}

TEST_CASE("zero constant term in the denominator is rejected") {
    CHECK_THROWS_AS(expand_rational(to_rationals({1}), to_rationals({0, 1}), 3),
                    std::domain_error);
}

TEST_CASE("maximal dimension sequence matches its generating function") {
    CHECK(maxdim_gf_check(50));
    CHECK(maxdim_gf_check(1));
    CHECK(modrep::max_simp_dim_series(6).coeff(6) == Rational(7));
}

TEST_CASE("codimension sequence values") {
    CHECK(codim_sequence(6) == 2);
    CHECK(codim_sequence(1) == 0);
    CHECK(codim_sequence(13) == 2);
    CHECK(codim_sequence(2) == 1);
    CHECK_THROWS_AS(codim_sequence(0), std::invalid_argument);
}

TEST_CASE("codimension sequence has the modular-forms generating function") {
    CHECK(modular_forms_identity_check(100));
    CHECK(modular_forms_series(2).coeff(2) == Rational(1));
    CHECK(modular_forms_series(6).coeff(6) == Rational(2));
}

TEST_CASE("box-counting polynomial for dimension vectors") {
    const Series g = mie_gf_poly(DimVector{2, 2, 2, 3, 3});
    check_coeffs(g, {1, 3, 6, 7, 6, 3, 1});  // (1+x+x^2)^3
    CHECK(g.coeff(3) == Rational(7));

    const Series h = mie_gf_poly(DimVector{1, 0, 0, 1, 0});
    check_coeffs(h, {1, 1});

    CHECK_THROWS_AS(mie_gf_poly(DimVector{1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("box-counting polynomial is palindromic") {
    std::uniform_int_distribution<long long> d(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const long long a1 = d(rng), a2 = d(rng), a3 = d(rng);
        if (a1 + a2 + a3 == 0) continue;
        const DimVector alpha{a1, a2, a3, a1 + a2 + a3, 0};
        const Series g = mie_gf_poly(alpha);
        const std::size_t deg = static_cast<std::size_t>(a1 + a2 + a3);
        for (std::size_t k = 0; k <= deg; ++k) CHECK(g.coeff(k) == g.coeff(deg - k));
    }
}

TEST_CASE("series multiplication against reciprocal") {
    for (int trial = 0; trial < 40; ++trial) {
        const Series f = random_unit_series(12);
        const Series product = f * f.reciprocal();
        CHECK(product.coeff(0) == Rational(1));
        for (std::size_t n = 1; n <= 12; ++n) CHECK(product.coeff(n) == Rational(0));
    }
    Series zero_head(3);
    zero_head.coeff(1) = Rational(1);
    CHECK_THROWS_AS((void)zero_head.reciprocal(), std::domain_error);
}

TEST_CASE("series ring identities") {
    const Series a = random_unit_series(10), b = random_unit_series(10), c = random_unit_series(10);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a.coeff(200).is_zero());  // beyond the truncation order
}
