#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace saa {

using Residue = std::uint32_t;

/// Deterministic primality test by trial division; adequate for the
/// moduli accepted by PrimeField (p < 2^31).
bool is_prime(std::uint64_t n) noexcept;

/// Residue arithmetic modulo a prime p < 2^31.
///
/// A PrimeField is a small value type; copies compare equal iff they share
/// the same modulus. Residues passed to the arithmetic members must already
/// be reduced.
class PrimeField {
public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

    /// Throws std::invalid_argument if p is not a prime in [2, 2^31).
    explicit PrimeField(std::uint64_t p = 3);

    Residue p() const noexcept { return p_; }

    Residue reduce(std::int64_t v) const noexcept;
    Residue add(Residue a, Residue b) const noexcept;
    Residue sub(Residue a, Residue b) const noexcept;
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept;
    /// Multiplicative inverse by extended Euclid. Throws std::domain_error on 0.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Residue p_;
};

/// An element of GF(p) carrying its field, for use at API boundaries.
class FieldElement {
public:
    FieldElement(PrimeField field, std::int64_t value)
        : field_(field), residue_(field.reduce(value)) {}

    Residue residue() const noexcept { return residue_; }
    const PrimeField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    /// Throws std::domain_error for zero.
    FieldElement inverse() const;

    FieldElement operator-() const { return {field_, field_.neg(residue_)}; }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    FieldElement(PrimeField field, Residue r, int) : field_(field), residue_(r) {}
    void require_same_field(const FieldElement& o) const;

    PrimeField field_;
    Residue residue_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace saa
