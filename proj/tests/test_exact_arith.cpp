#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/cyclotomic.hpp"
#include "modrep/matrix.hpp"
#include "modrep/rational.hpp"

using modrep::Cyclotomic;
using modrep::Matrix;
using modrep::Rational;

namespace {

std::mt19937 rng(20240229);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    return {num(rng), den(rng)};
}

Cyclotomic random_cyclotomic() { return {random_rational(), random_rational()}; }

Matrix random_matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_cyclotomic();
    return m;
}

Matrix random_invertible(std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(n, n);
        if (m.rank() == n) return m;
    }
}

}  // namespace

TEST_CASE("Rational normalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).is_zero());
    CHECK(Rational(3, 2).numerator() == 3);
    CHECK(Rational(3, 2).denominator() == 2);
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(5).to_string() == "5/1");
}

TEST_CASE("Rational arithmetic and errors") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(-2, 5).inverse() == Rational(-5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
}

TEST_CASE("Rational parsing") {
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("+2/6") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    for (int i = 0; i < 50; ++i) {
        const Rational r = random_rational();
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("omega is a primitive cube root of unity") {
    const Cyclotomic w = Cyclotomic::omega();
    CHECK(w * w * w == Cyclotomic(1));
    CHECK(Cyclotomic(1) + w + w * w == Cyclotomic(0));
    CHECK(w.pow(3) == Cyclotomic(1));
    CHECK_FALSE(w == Cyclotomic(1));
    CHECK(Cyclotomic::omega_pow(2) == w * w);
    CHECK(Cyclotomic::omega_pow(-1) == w * w);
}

TEST_CASE("(1+w)^3 = -1") {
    // 1 + w = -w^2, so the cube is -w^6 = -1.
    const Cyclotomic s = Cyclotomic(1) + Cyclotomic::omega();
    CHECK(s == -Cyclotomic::omega_pow(2));
    CHECK(s.pow(3) == Cyclotomic(-1));
}

TEST_CASE("inverse of omega is omega^2 = -1 - w") {
    const Cyclotomic inv = Cyclotomic::omega().inverse();
    CHECK(inv == Cyclotomic{Rational(-1), Rational(-1)});
    CHECK(inv * Cyclotomic::omega() == Cyclotomic(1));
    CHECK_THROWS_AS((void)Cyclotomic(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms hold on random triples") {
    for (int i = 0; i < 1000; ++i) {
        const Cyclotomic x = random_cyclotomic(), y = random_cyclotomic(), z = random_cyclotomic();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Cyclotomic(1));
            CHECK_FALSE(x.norm().is_zero());
        }
    }
}

TEST_CASE("cyclotomic string form round-trips") {
    CHECK(Cyclotomic::omega().to_string() == "0/1+1/1*w");
    CHECK(Cyclotomic::parse("0/1+1/1*w") == Cyclotomic::omega());
    CHECK(Cyclotomic::parse("-1/1+-1/1*w") == Cyclotomic::omega_pow(2));
    CHECK(Cyclotomic::parse("1/2-3/4*w") == Cyclotomic{Rational(1, 2), Rational(-3, 4)});
    CHECK(Cyclotomic::parse("2") == Cyclotomic(2));
    CHECK(Cyclotomic::parse("w") == Cyclotomic::omega());
    CHECK(Cyclotomic::parse("-2*w") == Cyclotomic{Rational(0), Rational(-2)});
    CHECK_THROWS_AS(Cyclotomic::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::parse("1*w+2"), std::invalid_argument);
    for (int i = 0; i < 100; ++i) {
        const Cyclotomic z = random_cyclotomic();
        CHECK(Cyclotomic::parse(z.to_string()) == z);
    }
}

TEST_CASE("identity is neutral for matrix product") {
    const Matrix m = random_matrix(3, 3);
    CHECK(Matrix::identity(3) * m == m);
    CHECK(m * Matrix::identity(3) == m);
}

TEST_CASE("product of the n=3 family factors at lambda=(1,1,1)") {
    const Cyclotomic o(1), z(0);
    const Matrix p{{o, Cyclotomic(2), o}, {z, o, o}, {z, z, o}};
    const Matrix q{{o, z, z}, {Cyclotomic(-1), o, z}, {o, Cyclotomic(-2), o}};
    const Matrix pq = p * q;
    CHECK(pq.at(0, 0) == z);
    CHECK(pq.at(0, 1) == z);
    CHECK(pq.at(0, 2) == o);  // (PQ)_13 = l1*l2 = 1
}

TEST_CASE("elementary matrices compose: E12 * E23 = E13") {
    Matrix e12(3, 3), e23(3, 3), e13(3, 3);
    e12.at(0, 1) = Cyclotomic(1);
    e23.at(1, 2) = Cyclotomic(1);
    e13.at(0, 2) = Cyclotomic(1);
    CHECK(e12 * e23 == e13);
}

TEST_CASE("shape mismatch is rejected") {
    const Matrix a = random_matrix(2, 3), b = random_matrix(2, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + random_matrix(3, 2), std::invalid_argument);
}

TEST_CASE("rank of zero and identity matrices") {
    CHECK(Matrix(3, 3).rank() == 0);
    for (std::size_t n : {1, 2, 5}) CHECK(Matrix::identity(n).rank() == n);
}

TEST_CASE("the nine monomials at lambda=(1,1,1) span the 3x3 matrix space") {
    // X and Y of the 3-dimensional module at lambda = (1,1,1), precomputed.
    const Cyclotomic o(1), z(0);
    const Matrix x{{z, z, o}, {z, Cyclotomic(-1), o}, {o, Cyclotomic(-2), o}};
    const Matrix y{{z, z, o}, {z, Cyclotomic(-1), z}, {o, z, z}};
    const Matrix words[] = {Matrix::identity(3), x,         y,
                            x * x,              x * y,     y * x,
                            x * x * y,          x * y * x, x * x * y * x};
    Matrix stacked(9, 9);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c) stacked.at(r, c) = words[r].entries()[c];
    CHECK(stacked.rank() == 9);
}

TEST_CASE("matrix inverse") {
    CHECK(Matrix::identity(4).inverse() == Matrix::identity(4));

    const Cyclotomic w = Cyclotomic::omega(), z(0);
    const Matrix d{{w, z, z}, {z, w * w, z}, {z, z, Cyclotomic(1)}};
    const Matrix dinv{{w * w, z, z}, {z, w, z}, {z, z, Cyclotomic(1)}};
    CHECK(d.inverse() == dinv);

    Matrix singular(2, 2);
    singular.at(0, 0) = Cyclotomic(1);
    singular.at(1, 0) = Cyclotomic(1);
    CHECK_THROWS_AS((void)singular.inverse(), std::domain_error);

    for (int i = 0; i < 20; ++i) {
        const Matrix m = random_invertible(4);
        CHECK(m * m.inverse() == Matrix::identity(4));
    }
}

TEST_CASE("rank is invariant under row swaps and invertible factors") {
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 6);
        const std::size_t n = size(rng);
        Matrix m = random_matrix(n, n);

        Matrix swapped = m;
        for (std::size_t j = 0; j < n; ++j) std::swap(swapped.at(0, j), swapped.at(n - 1, j));
        CHECK(swapped.rank() == m.rank());

        const Matrix p = random_invertible(n);
        CHECK((p * m).rank() == m.rank());
        CHECK((m * p).rank() == m.rank());
    }
}

TEST_CASE("rank respects construction and transposition") {
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 5);
        const std::size_t n = 5, r = size(rng);
        // Conjugating a rank-r projection keeps rank exactly r; the nullspace
        // is the image of the remaining n-r basis vectors, so rank-nullity is
        // pinned against a dimension known by construction.
        Matrix core(n, n);
        for (std::size_t i = 0; i < r; ++i) core.at(i, i) = Cyclotomic(1);
        const Matrix p = random_invertible(n);
        const Matrix m = p * core * p.inverse();
        CHECK(m.rank() == r);
        CHECK(m.transpose().rank() == r);
        // Explicit nullspace witnesses: m * (p e_j) = 0 for j >= r.
        for (std::size_t j = r; j < n; ++j) {
            Matrix v(n, 1);
            for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = p.at(i, j);
            CHECK((m * v) == Matrix(n, 1));
        }
    }
}
