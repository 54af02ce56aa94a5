#include "saa/field.hpp"

#include <ostream>
#include <stdexcept>

namespace saa {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p)
{
    if (p > max_modulus || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    p_ = static_cast<Residue>(p);
}

Residue PrimeField::reduce(std::int64_t v) const noexcept
{
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Residue>(r);
}

Residue PrimeField::add(Residue a, Residue b) const noexcept
{
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue PrimeField::sub(Residue a, Residue b) const noexcept
{
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
}

Residue PrimeField::mul(Residue a, Residue b) const noexcept
{
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
}

Residue PrimeField::inv(Residue a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    std::int64_t r0 = p_, r1 = a;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    // r0 == gcd == 1 since p is prime
    return reduce(t0);
}

FieldElement FieldElement::inverse() const
{
    return {field_, field_.inv(residue_), 0};
}

void FieldElement::require_same_field(const FieldElement& o) const
{
    if (!(field_ == o.field_))
        throw std::invalid_argument("field elements from different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    require_same_field(o);
    residue_ = field_.add(residue_, o.residue_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    require_same_field(o);
    residue_ = field_.sub(residue_, o.residue_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    require_same_field(o);
    residue_ = field_.mul(residue_, o.residue_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    require_same_field(o);
    residue_ = field_.mul(residue_, field_.inv(o.residue_));
    return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e)
{
    return os << e.residue();
}

}  // namespace saa
