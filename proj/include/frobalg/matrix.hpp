#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/rational.hpp"

namespace frobalg {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);

/// Dense matrix of exact rationals, row-major. All operations are exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    /// Column vector (n x 1).
    static RatMatrix column(const Vec& v);
    /// Row vector (1 x n).
    static RatMatrix row(const Vec& v);
    static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& o) const;

    Vec apply(const Vec& x) const;
    Vec row_vec(std::size_t i) const;
    Vec col_vec(std::size_t j) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Kronecker product. Basis ordering: left factor index is the slow one,
/// i.e. (v_i (x) w_j) sits at position i*dim(W)+j. This convention is fixed
/// project-wide; every tensor identity below relies on it.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_inplace(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Exact Gaussian elimination. Returns some x with A x = b, or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve(const RatMatrix& a, const Vec& b);

/// Solves A X = B column by column; nullopt when any column is inconsistent.
std::optional<RatMatrix> solve_matrix(const RatMatrix& a, const RatMatrix& b);

/// Basis of the null space of A (solutions of A x = 0).
std::vector<Vec> kernel_basis(const RatMatrix& a);

/// Inverse of a square matrix, nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Right inverse P with A P = I for surjective A (rows <= cols, full row rank).
std::optional<RatMatrix> right_inverse(const RatMatrix& a);

/// Stacks matrices with equal column count on top of each other.
RatMatrix vstack(const std::vector<RatMatrix>& blocks);

}  // namespace frobalg
