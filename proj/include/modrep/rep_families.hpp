#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modrep/cyclotomic.hpp"
#include "modrep/dimvec.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

/// A module over k<x,y>/(x^3-1, y^2-1), given by the images X, Y of the two
/// generators. The constructor only enforces shape; verify_relations() checks
/// the defining relations, and every family constructor guarantees them.
struct Representation {
    Matrix X, Y;

    Representation(Matrix x, Matrix y) : X(std::move(x)), Y(std::move(y)) {
        if (!X.is_square() || !Y.is_square() || X.rows() != Y.rows())
            throw std::invalid_argument("Representation: X and Y must be square of equal size");
    }

    [[nodiscard]] std::size_t dim() const { return X.rows(); }
};

/// True iff X^3 = I and Y^2 = I hold exactly.
inline bool verify_relations(const Representation& rep) {
    const Matrix id = Matrix::identity(rep.dim());
    return rep.X * rep.X * rep.X == id && rep.Y * rep.Y == id;
}

namespace detail {
inline void require_relations(const Representation& rep, const char* who) {
    if (!verify_relations(rep))
        throw std::invalid_argument(std::string(who) + ": relations X^3=I, Y^2=I violated");
}
}  // namespace detail

/// The six points of Simp_1: x -> w^k, y -> sign.
inline Representation one_dim(int omega_power, int y_sign) {
    if (omega_power < 0 || omega_power > 2)
        throw std::invalid_argument("one_dim: omega_power must be 0, 1 or 2");
    if (y_sign != 1 && y_sign != -1)
        throw std::invalid_argument("one_dim: y_sign must be +1 or -1");
    Matrix x(1, 1), y(1, 1);
    x.at(0, 0) = Cyclotomic::omega_pow(omega_power);
    y.at(0, 0) = Cyclotomic(y_sign);
    return {std::move(x), std::move(y)};
}

/// Family M_s:  x -> [[1,1],[0,w^p]],  y -> [[1,0],[s,-1]].
/// Simple exactly for s outside {0, 2(w^p - 1)}.
inline Representation two_dim_M(const Cyclotomic& s, int omega_power = 1) {
    if (omega_power != 1 && omega_power != 2)
        throw std::invalid_argument("two_dim_M: omega_power must be 1 or 2");
    const Cyclotomic w = Cyclotomic::omega_pow(omega_power);
    Matrix x{{Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(0), w}};
    Matrix y{{Cyclotomic(1), Cyclotomic(0)}, {s, Cyclotomic(-1)}};
    return {std::move(x), std::move(y)};
}

/// Family N_t:  x -> [[1,0],[1,w^p]],  y -> [[1,t],[0,-1]].
/// Simple exactly for t outside {0, 2(w^p - 1)}; N_t is conjugate to M_t there.
inline Representation two_dim_N(const Cyclotomic& t, int omega_power = 1) {
    if (omega_power != 1 && omega_power != 2)
        throw std::invalid_argument("two_dim_N: omega_power must be 1 or 2");
    const Cyclotomic w = Cyclotomic::omega_pow(omega_power);
    Matrix x{{Cyclotomic(1), Cyclotomic(0)}, {Cyclotomic(1), w}};
    Matrix y{{Cyclotomic(1), t}, {Cyclotomic(0), Cyclotomic(-1)}};
    return {std::move(x), std::move(y)};
}

/// The 3-dimensional family: x -> PQ, y -> PQP built from
///
///       | l1  l1*l3/l2 + l2  l2 |        | l3        0         0  |
///   P = | 0        l2        l2 |    Q = | -l2       l2        0  |
///       | 0        0         l3 |        | l2  -l1*l3/l2 - l2  l1 |
///
/// subject to (l1*l2*l3)^2 = 1. The relations X^3 = Y^2 = I are asserted on
/// every construction.
inline Representation three_dim(const Cyclotomic& l1, const Cyclotomic& l2,
                                const Cyclotomic& l3) {
    if (l1.is_zero() || l2.is_zero() || l3.is_zero())
        throw std::invalid_argument("three_dim: parameters must be nonzero");
    const Cyclotomic prod = l1 * l2 * l3;
    if (!(prod * prod == Cyclotomic(1)))
        throw std::invalid_argument("three_dim: (l1*l2*l3)^2 = 1 violated");

    const Cyclotomic mixed = l1 * l3 / l2 + l2;
    const Cyclotomic zero(0);
    Matrix p{{l1, mixed, l2}, {zero, l2, l2}, {zero, zero, l3}};
    Matrix q{{l3, zero, zero}, {-l2, l2, zero}, {l2, -mixed, l1}};

    Matrix x = p * q;
    Matrix y = x * p;  // PQP
    Representation rep{std::move(x), std::move(y)};
    if (!verify_relations(rep))
        throw std::runtime_error("three_dim: constructed module violates X^3=Y^2=I");
    return rep;
}

/// Idempotent projecting onto the w^k-eigenspace of X (X^3 = I assumed):
/// (1/3)(I + w^-k X + w^-2k X^2).
inline Matrix x_eigenprojector(const Matrix& X, int k) {
    const Rational third(1, 3);
    const Cyclotomic c1 = Cyclotomic(third) * Cyclotomic::omega_pow(-k);
    const Cyclotomic c2 = Cyclotomic(third) * Cyclotomic::omega_pow(-2 * k);
    return Cyclotomic(third) * Matrix::identity(X.rows()) + c1 * X + c2 * (X * X);
}

/// Idempotent projecting onto the (+1 or -1)-eigenspace of Y (Y^2 = I assumed).
inline Matrix y_eigenprojector(const Matrix& Y, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("y_eigenprojector: sign must be +1 or -1");
    const Cyclotomic half{Rational(1, 2)};
    const Cyclotomic c = sign == 1 ? half : -half;
    return half * Matrix::identity(Y.rows()) + c * Y;
}

/// Eigenspace dimensions (rank of each idempotent's image), balanced by
/// construction since the projectors sum to the identity.
inline DimVector dimension_vector_of(const Representation& rep) {
    detail::require_relations(rep, "dimension_vector_of");
    const long long a1 = static_cast<long long>(x_eigenprojector(rep.X, 0).rank());
    const long long a2 = static_cast<long long>(x_eigenprojector(rep.X, 1).rank());
    const long long a3 = static_cast<long long>(x_eigenprojector(rep.X, 2).rank());
    const long long b1 = static_cast<long long>(y_eigenprojector(rep.Y, 1).rank());
    const long long b2 = static_cast<long long>(y_eigenprojector(rep.Y, -1).rank());
    return {a1, a2, a3, b1, b2};
}

/// Simplicity via Burnside: the module is simple iff the words in X, Y span
/// all of the n x n matrix space. The span is grown breadth-first by right
/// multiplication and the search stops as soon as rank n^2 is reached; the
/// relations bound the word alphabet, so the span stabilizes quickly.
inline bool is_simple(const Representation& rep) {
    detail::require_relations(rep, "is_simple");
    const std::size_t n = rep.dim();
    const std::size_t full = n * n;

    RowSpan span(full);
    std::vector<Matrix> frontier;
    Matrix id = Matrix::identity(n);
    span.insert(id);
    frontier.push_back(std::move(id));

    while (!frontier.empty() && span.rank() < full) {
        std::vector<Matrix> next;
        for (const Matrix& m : frontier) {
            for (const Matrix* g : {&rep.X, &rep.Y}) {
                Matrix prod = m * *g;
                if (span.insert(prod)) {
                    next.push_back(std::move(prod));
                    if (span.rank() == full) return true;
                }
            }
        }
        frontier = std::move(next);
    }
    return span.rank() == full;
}

/// Trace generators of the 3-dimensional family: t_xy = tr(XY) and
/// t_xyx = tr(XYX), which equal sum(1/l_i) and sum(l_i) on three_dim input.
struct TraceInvariants {
    Cyclotomic t_xy;
    Cyclotomic t_xyx;
};

inline TraceInvariants trace_invariants(const Representation& rep) {
    if (rep.dim() != 3)
        throw std::invalid_argument("trace_invariants: defined only for n = 3");
    const Matrix xy = rep.X * rep.Y;
    return {xy.trace(), (xy * rep.X).trace()};
}

/// Non-simple locus of the 3-dimensional component with l1*l2*l3 = 1: the
/// three lines t_xy - l*t_xyx + 2l^2 = 0, l running over the cube roots of
/// -1 in Q(w), namely -1, -w, -w^2.
inline bool non_simple_locus_n3(const Cyclotomic& t_xy, const Cyclotomic& t_xyx) {
    for (int k : {0, 1, 2}) {
        const Cyclotomic l = -Cyclotomic::omega_pow(k);
        if ((t_xy - l * t_xyx + Cyclotomic(2) * l * l).is_zero()) return true;
    }
    return false;
}

/// Conjugates a diagonalisable upper triangular Z to diagonal form by an
/// upper triangular U: returns U with U^-1 Z U diagonal, diag(U^-1 Z U) =
/// diag(Z). Entries are cleared by elementary conjugations I + c E_ij in
/// increasing j-i order with c = z_ij / (z_jj - z_ii); each step only touches
/// entries of strictly larger span. An entry z_ij != 0 with z_ii = z_jj means
/// Z was not diagonalisable (impossible for Z^2 = I or Z^3 = I).
inline Matrix diagonalize_triangular(const Matrix& Z) {
    if (!Z.is_square() || !Z.is_upper_triangular())
        throw std::invalid_argument("diagonalize_triangular: Z must be square upper triangular");
    const std::size_t n = Z.rows();
    Matrix w = Z;
    Matrix u = Matrix::identity(n);

    for (std::size_t span = 1; span < n; ++span) {
        for (std::size_t i = 0; i + span < n; ++i) {
            const std::size_t j = i + span;
            if (w.at(i, j).is_zero()) continue;
            const Cyclotomic diff = w.at(j, j) - w.at(i, i);
            if (diff.is_zero())
                throw std::domain_error(
                    "diagonalize_triangular: equal-eigenvalue entry survived, Z is not diagonalisable");
            const Cyclotomic c = w.at(i, j) / diff;
            // Conjugate w by I + c E_ij: column j += c * column i (rows <= i),
            // then row i -= c * row j (columns >= j). w stays upper triangular.
            for (std::size_t r = 0; r <= i; ++r) w.at(r, j) += c * w.at(r, i);
            for (std::size_t col = j; col < n; ++col) w.at(i, col) -= c * w.at(j, col);
            // Accumulate U = U * (I + c E_ij): column j of U += c * column i.
            for (std::size_t r = 0; r < n; ++r) u.at(r, j) += c * u.at(r, i);
        }
    }
    if (!w.is_diagonal())
        throw std::runtime_error("diagonalize_triangular: sweep failed to diagonalise");
    return u;
}

/// One-sided conjugacy certificate: equality of tr(word) on both modules for
/// every alternating word in x, y up to the given number of blocks (an x-power
/// or a single y per block; default 2n covers the n = 3 generators xy, xyx).
/// Equal traces are necessary for isomorphism and decide it for semi-simple
/// modules, but do not separate opposite non-split extensions.
inline bool trace_certificate_agrees(const Representation& lhs, const Representation& rhs,
                                     std::size_t blocks = 0) {
    if (lhs.dim() != rhs.dim()) return false;
    if (blocks == 0) blocks = 2 * lhs.dim();

    struct Node {
        Matrix a, b;
        int last;  // 0 = none, 1 = x-block, 2 = y-block
    };
    std::vector<Node> frontier;
    frontier.push_back({Matrix::identity(lhs.dim()), Matrix::identity(rhs.dim()), 0});
    const Matrix lx2 = lhs.X * lhs.X, rx2 = rhs.X * rhs.X;

    for (std::size_t depth = 0; depth <= blocks; ++depth) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            if (!(node.a.trace() == node.b.trace())) return false;
            if (depth == blocks) continue;
            if (node.last != 1) {
                next.push_back({node.a * lhs.X, node.b * rhs.X, 1});
                next.push_back({node.a * lx2, node.b * rx2, 1});
            }
            if (node.last != 2) next.push_back({node.a * lhs.Y, node.b * rhs.Y, 2});
        }
        frontier = std::move(next);
    }
    return true;
}

}  // namespace modrep
