#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "saa/field.hpp"

namespace saa {

/// Coordinate vector over GF(p).
class Vector {
public:
    Vector(PrimeField field, std::size_t size) : field_(field), coords_(size, 0) {}
    Vector(PrimeField field, std::span<const Residue> coords);
    /// Entries are reduced modulo p.
    Vector(PrimeField field, std::initializer_list<std::int64_t> coords);

    static Vector unit(PrimeField field, std::size_t size, std::size_t index);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    Residue operator[](std::size_t i) const { return coords_[i]; }
    Residue& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Residue> coords() const noexcept { return coords_; }
    std::span<Residue> coords() noexcept { return coords_; }
    bool is_zero() const noexcept;

    /// this += c * other
    void axpy(Residue c, std::span<const Residue> other);
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector scaled(Residue c) const;

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator-(const Vector& a) { return a.scaled(a.field_.neg(1)); }
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    void require_compatible(const Vector& o) const;

    PrimeField field_;
    std::vector<Residue> coords_;
};

/// Dense row-major matrix over GF(p).
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Entries are reduced modulo p.
    Matrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const { return {field_, row(r)}; }

    void append_row(std::span<const Residue> values);
    void truncate_rows(std::size_t rows);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Reduces m to reduced row-echelon form in place; zero rows end up at the
/// bottom. Returns the pivot columns in increasing order.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// Unique reduced row-echelon form of m, same shape as m.
Matrix rref(Matrix m);

/// Basis (as rows, in RREF) of {v : m * v = 0}.
Matrix nullspace(const Matrix& m);

/// A subspace of GF(p)^d held by its canonical RREF basis.
///
/// Two subspaces are equal iff their canonical bases are entry-wise equal.
class Subspace {
public:
    static Subspace zero(PrimeField field, std::size_t ambient_dim);
    static Subspace full(PrimeField field, std::size_t ambient_dim);
    /// Row space of `rows` (any shape, any rank).
    static Subspace row_space(Matrix rows);
    static Subspace span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& vectors);

    const PrimeField& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

    /// Canonical representative of v modulo this subspace: v minus the
    /// combination of basis rows that clears every pivot column.
    Vector reduce(const Vector& v) const;
    void reduce_in_place(std::span<Residue> v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& s) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Throws std::invalid_argument on ambient dimension or field mismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Gram matrix of the standard symplectic form on GF(p)^{2n}.
///
/// Coordinates are ordered x_1, y_1, ..., x_n, y_n, so x_i sits at 2(i-1) and
/// y_i at 2(i-1)+1 (zero based). (x_i, y_j) = delta_ij, every other pairing of
/// basis vectors with the same kind is zero.
class GramMatrix {
public:
    GramMatrix(PrimeField field, std::size_t half_dim);

    const PrimeField& field() const noexcept { return matrix_.field(); }
    std::size_t half_dim() const noexcept { return half_dim_; }
    std::size_t dim() const noexcept { return 2 * half_dim_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    /// (u, v)
    Residue pair(std::span<const Residue> u, std::span<const Residue> v) const;
    FieldElement pair(const Vector& u, const Vector& v) const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    std::size_t half_dim_;
    Matrix matrix_;
};

/// {v : (v, u) = 0 for all u in s}.
Subspace perp(const Subspace& s, const GramMatrix& g);

/// The unique v with (v, u_k) = rhs[k] for every standard basis vector u_k.
/// The coefficient of x_k is rhs at y_k; the coefficient of y_k is minus rhs
/// at x_k.
Vector solve_against_form(const GramMatrix& g, std::span<const Residue> rhs);

}  // namespace saa
