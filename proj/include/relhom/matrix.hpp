#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relhom/field.hpp"

namespace relhom {

/// Dense matrix over an exact field. Entries are stored row-major and kept in
/// canonical form; values are immutable in spirit (mutation only through set()).
/// Zero-row and zero-column shapes are fully supported.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(FieldSpec field, std::size_t rows,
                               const std::vector<std::vector<Scalar>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Scalar>& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    Matrix scaled(const Scalar& s) const;
    Matrix transposed() const;
    /// Columns [begin, end).
    Matrix columns_slice(std::size_t begin, std::size_t end) const;

    bool is_zero() const;
    bool is_identity() const;

    /// Matrix-vector product.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;

    std::size_t idx(std::size_t r, std::size_t c) const { return r * cols_ + c; }
    friend struct MatrixOps;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Kronecker product; row index (i,k) -> i*b.rows()+k, matching the
/// lexicographic basis-pair convention used for tensor constructions.
Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with lexicographically earliest pivot columns.
/// Deterministic for a fixed input.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One particular solution x of a*x = b with free variables set to zero,
/// or std::nullopt when the system is inconsistent.
/// Throws DimensionMismatch when row counts differ.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Canonical (echelon-normalized) basis of the null space, as columns,
/// ordered by ascending free-column index.
Matrix kernel(const Matrix& m);

/// Canonical basis of the column space, as columns.
Matrix column_space(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

struct QuotientMaps {
    Matrix projection;  // ambient -> quotient, kernel = subspace
    Matrix section;     // quotient -> ambient, projection*section = id
};

/// Quotient of the ambient space by the span of the given (independent)
/// columns. The complement is spanned by the non-pivot coordinates of the
/// subspace, so the construction is deterministic.
QuotientMaps quotient(std::size_t ambient_dim, const Matrix& subspace);

/// Column vector (n x 1) from coordinates.
Matrix column_vector(FieldSpec field, const std::vector<Scalar>& v);

/// Row-major vectorization of m as an (rows*cols) x 1 column.
Matrix vectorize(const Matrix& m);
Matrix unvectorize(FieldSpec field, std::size_t rows, std::size_t cols, const Matrix& v);

}  // namespace relhom
