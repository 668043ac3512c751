#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modrep/cyclotomic.hpp"

namespace modrep {

/// Dense matrix over Q(w), row-major. All arithmetic is exact; rank and
/// inverse run textbook Gaussian elimination pivoting on the first nonzero
/// entry in column order (lowest row index), which is all exact arithmetic
/// needs.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    /// Row-major construction from nested braces; rows must be rectangular.
    Matrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows)
        : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            std::size_t j = 0;
            for (const auto& v : row) at(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Cyclotomic& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Cyclotomic& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<Cyclotomic>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "operator+");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "operator-");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator*(const Cyclotomic& c, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = c * m.e_[k];
        return r;
    }

    [[nodiscard]] Matrix pow(unsigned e) const {
        require_square("pow");
        Matrix r = identity(rows_);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    [[nodiscard]] Cyclotomic trace() const {
        require_square("trace");
        Cyclotomic t;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    [[nodiscard]] bool is_upper_triangular() const {
        for (std::size_t i = 1; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if (!at(i, j).is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    [[nodiscard]] std::size_t rank() const {
        Matrix w = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < w.cols_ && r < w.rows_; ++col) {
            std::size_t pivot = r;
            while (pivot < w.rows_ && w.at(pivot, col).is_zero()) ++pivot;
            if (pivot == w.rows_) continue;
            w.swap_rows(r, pivot);
            const Cyclotomic inv = w.at(r, col).inverse();
            for (std::size_t i = r + 1; i < w.rows_; ++i) {
                if (w.at(i, col).is_zero()) continue;
                const Cyclotomic f = w.at(i, col) * inv;
                for (std::size_t j = col; j < w.cols_; ++j)
                    w.at(i, j) -= f * w.at(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Exact inverse via Gauss-Jordan; throws on singular input.
    [[nodiscard]] Matrix inverse() const {
        require_square("inverse");
        Matrix w = *this;
        Matrix inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_)
                throw std::domain_error("Matrix: singular matrix has no inverse");
            w.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            const Cyclotomic d = w.at(col, col).inverse();
            for (std::size_t j = 0; j < cols_; ++j) {
                w.at(col, j) *= d;
                inv.at(col, j) *= d;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == col || w.at(i, col).is_zero()) continue;
                const Cyclotomic f = w.at(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    w.at(i, j) -= f * w.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Entries flattened row-major, as a 1 x (rows*cols) row vector.
    [[nodiscard]] Matrix flatten_row() const {
        Matrix r(1, rows_ * cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k];
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
    }

    void require_square(const char* op) const {
        if (!is_square())
            throw std::invalid_argument(std::string("Matrix: ") + op + " requires a square matrix");
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    std::size_t rows_, cols_;
    std::vector<Cyclotomic> e_;
};

/// Incremental row-space tracker: feed row vectors, learn the rank so far.
/// Keeps an echelonized basis; insert() reports whether the rank grew.
class RowSpan {
public:
    explicit RowSpan(std::size_t width) : width_(width) {}

    [[nodiscard]] std::size_t rank() const { return basis_.size(); }

    bool insert(std::vector<Cyclotomic> v) {
        if (v.size() != width_)
            throw std::invalid_argument("RowSpan: width mismatch");
        for (const auto& [pivot, row] : basis_) {
            if (v[pivot].is_zero()) continue;
            const Cyclotomic f = v[pivot];
            for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
        }
        std::size_t pivot = 0;
        while (pivot < width_ && v[pivot].is_zero()) ++pivot;
        if (pivot == width_) return false;
        const Cyclotomic inv = v[pivot].inverse();
        for (std::size_t j = 0; j < width_; ++j) v[j] *= inv;
        basis_.emplace_back(pivot, std::move(v));
        return true;
    }

    bool insert(const Matrix& m) {
        return insert(std::vector<Cyclotomic>(m.entries()));
    }

private:
    std::size_t width_;
    std::vector<std::pair<std::size_t, std::vector<Cyclotomic>>> basis_;
};

}  // namespace modrep
