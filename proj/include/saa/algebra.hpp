#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "saa/field.hpp"
#include "saa/linalg.hpp"
#include "saa/presentation.hpp"

namespace saa {

/// Fully alternating 3-form gamma(u, v, w) on the coordinates of a
/// 2n-dimensional space. Only nonzero values on strictly increasing
/// coordinate triples are stored; other orderings follow by sign.
class StructureTensor {
public:
    using Key = std::array<std::size_t, 3>;

    StructureTensor(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    /// gamma(i, j, k); zero when two arguments coincide.
    Residue value(std::size_t i, std::size_t j, std::size_t k) const;
    /// Sets gamma(i, j, k) = v, and by alternation every permutation.
    /// Throws std::invalid_argument if two arguments coincide and v != 0.
    void set(std::size_t i, std::size_t j, std::size_t k, Residue v);

    const std::map<Key, Residue>& entries() const noexcept { return entries_; }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    PrimeField field_;
    std::size_t dim_;
    std::map<Key, Residue> entries_;
};

/// A symplectic alternating algebra on a standard basis: the symplectic
/// space, its structure tensor, and the derived basis multiplication table.
///
/// Products are recovered from the tensor through the form:
///   u.v = sum_k gamma(u,v,y_k) x_k - sum_k gamma(u,v,x_k) y_k.
/// Immutable after construction.
class Algebra {
public:
    /// The unique algebra with (u_i u_j, u_k) given by the presentation and
    /// every unlisted triple zero.
    static Algebra build(const Presentation& p);

    /// Wraps an arbitrary product table (table[i*dim + j] = u_i . u_j). The
    /// tensor is read back as gamma(i,j,k) = (u_i u_j, u_k) on increasing
    /// triples, so a table that is not a valid algebra is representable;
    /// check_axioms detects it.
    static Algebra from_table(PrimeField field, int n, std::vector<Vector> table);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(n_); }
    const PrimeField& field() const noexcept { return form_.field(); }
    const GramMatrix& form() const noexcept { return form_; }
    const StructureTensor& tensor() const noexcept { return tensor_; }

    /// u_i . u_j as a coordinate span.
    std::span<const Residue> product(std::size_t i, std::size_t j) const
    {
        return {table_.data() + (i * dim() + j) * dim(), dim()};
    }

    Vector basis(BasisVector b) const { return Vector::unit(field(), dim(), b.coordinate()); }
    Vector multiply(const Vector& u, const Vector& v) const;
    FieldElement pair(const Vector& u, const Vector& v) const;

    /// Matrix whose k-th row is u . u_k.
    Matrix right_products(std::span<const Residue> u) const;

    /// Nonzero tensor values as a canonical presentation.
    Presentation presentation() const;

private:
    Algebra(PrimeField field, int n);

    int n_;
    GramMatrix form_;
    StructureTensor tensor_;
    std::vector<Residue> table_;
};

inline Algebra build_algebra(const Presentation& p) { return Algebra::build(p); }

/// Throws std::invalid_argument on field or length mismatch.
Vector multiply(const Algebra& alg, const Vector& u, const Vector& v);
FieldElement form(const Algebra& alg, const Vector& u, const Vector& v);

}  // namespace saa
