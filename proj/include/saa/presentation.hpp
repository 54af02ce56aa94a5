#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "saa/field.hpp"

namespace saa {

/// x_i or y_i of a standard basis x_1, y_1, ..., x_n, y_n (1-based index).
struct BasisVector {
    enum class Kind { X, Y };

    Kind kind;
    int index;

    static BasisVector x(int i) { return {Kind::X, i}; }
    static BasisVector y(int i) { return {Kind::Y, i}; }
    /// Inverse of coordinate().
    static BasisVector from_coordinate(std::size_t c);

    /// Zero-based coordinate: x_i -> 2(i-1), y_i -> 2(i-1)+1.
    std::size_t coordinate() const { return 2 * static_cast<std::size_t>(index - 1) + (kind == Kind::Y ? 1 : 0); }
    bool is_x() const noexcept { return kind == Kind::X; }
    bool is_y() const noexcept { return kind == Kind::Y; }
    std::string to_string() const;

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    /// Coordinate order.
    friend std::strong_ordering operator<=>(const BasisVector& a, const BasisVector& b)
    {
        return a.coordinate() <=> b.coordinate();
    }
};

/// (a b, c) = value.
struct Triple {
    BasisVector a;
    BasisVector b;
    BasisVector c;
    FieldElement value;

    friend bool operator==(const Triple&, const Triple&) = default;
};

class PresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A list of nonzero triple values (u v, w) on a standard basis of a
/// 2n-dimensional symplectic space; unlisted triples are zero.
///
/// Construction validates: indices in [1, n], the entries of each triple are
/// pairwise distinct, no two triples name the same unordered set of basis
/// vectors, and every value lives in `field`.
class Presentation {
public:
    Presentation(int n, PrimeField field, std::vector<Triple> triples = {});

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(n_); }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Triple>& triples() const noexcept { return triples_; }

    /// Same algebra, entries of every triple sorted into coordinate order
    /// (value sign-adjusted), zero triples dropped, triples sorted.
    Presentation canonical() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    int n_;
    PrimeField field_;
    std::vector<Triple> triples_;
};

/// True iff every triple has shape (x_i, y_j, y_k) or (y_i, y_j, y_k) with
/// 1 <= i < j < k <= n, in that entry order.
bool validate_nilpotent_presentation(const Presentation& p);

/// Parses "x3" / "y12"; throws std::invalid_argument.
BasisVector parse_basis_vector(std::string_view token);

}  // namespace saa
