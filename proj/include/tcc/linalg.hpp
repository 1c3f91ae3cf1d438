#pragma once

// Dense exact linear algebra over a finite field.
//
// Vectors are rows and matrices act on the right (v -> vA), so nullspaces
// are row nullspaces and change-of-basis matrices hold basis vectors as rows.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tcc/gf.hpp"
#include "tcc/poly.hpp"

namespace tcc {

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    /// Rows given as nested lists, e.g. {{0, 1}, {0, 0}}.
    Matrix(Field field, const std::vector<std::vector<Elem>>& rows);

    static Matrix identity(Field field, std::size_t n);
    static Matrix scalar(Field field, std::size_t n, Elem a);
    static Matrix diagonal(Field field, const std::vector<Elem>& d);
    /// Companion matrix of a monic f: ones on the superdiagonal, last row -f_0..-f_{n-1}.
    static Matrix companion(const Poly& f);
    /// Nilpotent Jordan block of size n: ones at (i, i+1).
    static Matrix jordan_block(Field field, std::size_t n);
    static Matrix block_diagonal(const std::vector<Matrix>& blocks);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }

    const std::vector<Elem>& entries() const noexcept { return a_; }
    std::vector<Elem> row(std::size_t i) const;

    bool is_zero() const noexcept;
    /// True iff the matrix is alpha * I for some alpha; 0x0 counts as scalar.
    bool is_scalar() const noexcept;

    Elem trace() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// Apply a map entry-wise, landing in `target`.
    Matrix map(const Field& target, const std::function<Elem(Elem)>& f) const;

    std::string str() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem c);
Matrix transpose(const Matrix& a);
Matrix power(const Matrix& a, std::size_t e);
Elem det(const Matrix& a);
/// Throws std::domain_error for singular input.
Matrix inverse(const Matrix& a);

/// f(A) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& a);

/// Row vector times matrix.
std::vector<Elem> row_times(const std::vector<Elem>& v, const Matrix& a);

struct Rref {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : vM = 0}, as rows of a matrix with rows(M) - rank(M) rows.
/// Equal nullspaces give identical bases (reduced echelon form).
Matrix row_nullspace(const Matrix& m);

/// Basis of the row space in reduced echelon form.
Matrix row_space(const Matrix& m);

/// Stack matrices with equal column counts.
Matrix vstack(const Matrix& top, const Matrix& bottom);

Matrix kron(const Matrix& a, const Matrix& b);

/// Concatenation of the rows of a square B, as a 1 x n^2 matrix.
Matrix vec(const Matrix& b);
Matrix unvec(const Matrix& v, std::size_t n);

/// det(tI - A), via reduction to Hessenberg form.
Poly charpoly(const Matrix& a);

/// Least common multiple of the local minimal polynomials of the unit vectors.
Poly minpoly(const Matrix& a);

bool is_cyclic(const Matrix& a);

/// rank(A^0), rank(A^1), ..., rank(A^n).
std::vector<std::size_t> rank_sequence(const Matrix& a);

/// Change of basis P putting A into block form diag(first, second), with
/// P A P^-1 = diag(first, second).
struct BlockSplit {
    Matrix change;
    Matrix first;
    Matrix second;
};

struct FittingSplit {
    Matrix change;     // P
    Matrix nilpotent;  // A_nil, m0 x m0
    Matrix invertible; // A_inv, (n - m0) x (n - m0)
    std::size_t m0;    // n - rank(A^n)
    std::size_t k0;    // n - rank(A)
};

/// V = V_nil + V_inv with V_nil = nullspace of A^n and V_inv the row space of A^n.
FittingSplit fitting_split(const Matrix& a);

/// V1 = nullspace of (A - alpha I)^n, V2 = row space of (A - alpha I)^n; the
/// first block carries the alpha-primary part.
BlockSplit split_at_eigenvalue(const Matrix& a, Elem alpha);

}  // namespace tcc
