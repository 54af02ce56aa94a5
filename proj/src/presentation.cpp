#include "saa/presentation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace saa {

BasisVector BasisVector::from_coordinate(std::size_t c)
{
    return {c % 2 == 0 ? Kind::X : Kind::Y, static_cast<int>(c / 2) + 1};
}

std::string BasisVector::to_string() const
{
    return (kind == Kind::X ? "x" : "y") + std::to_string(index);
}

BasisVector parse_basis_vector(std::string_view token)
{
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y'))
        throw std::invalid_argument("malformed basis vector '" + std::string(token) + "'");
    int index = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits[0] == '0' || digits[0] == '+')
        throw std::invalid_argument("malformed basis vector '" + std::string(token) + "'");
    return {token[0] == 'x' ? BasisVector::Kind::X : BasisVector::Kind::Y, index};
}

Presentation::Presentation(int n, PrimeField field, std::vector<Triple> triples)
    : n_(n), field_(field), triples_(std::move(triples))
{
    if (n < 1)
        throw PresentationError("half-dimension n must be at least 1");
    std::set<std::array<std::size_t, 3>> seen;
    for (const auto& t : triples_) {
        for (const auto& b : {t.a, t.b, t.c})
            if (b.index < 1 || b.index > n)
                throw PresentationError("basis vector " + b.to_string() + " out of range for n = " + std::to_string(n));
        if (t.a == t.b || t.a == t.c || t.b == t.c)
            throw PresentationError("repeated basis vector in triple (" + t.a.to_string() + ", " + t.b.to_string() +
                                    ", " + t.c.to_string() + ")");
        if (!(t.value.field() == field))
            throw PresentationError("triple value from a different field");
        std::array<std::size_t, 3> key{t.a.coordinate(), t.b.coordinate(), t.c.coordinate()};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw PresentationError("duplicate triple on {" + t.a.to_string() + ", " + t.b.to_string() + ", " +
                                    t.c.to_string() + "}");
    }
}

Presentation Presentation::canonical() const
{
    std::vector<Triple> out;
    for (const auto& t : triples_) {
        if (t.value.is_zero())
            continue;
        std::array<BasisVector, 3> e{t.a, t.b, t.c};
        // count transpositions of a 3-element sort
        bool odd = false;
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < 2; ++i)
                if (e[i + 1] < e[i]) {
                    std::swap(e[i], e[i + 1]);
                    odd = !odd;
                }
        out.push_back({e[0], e[1], e[2], odd ? -t.value : t.value});
    }
    auto key = [](const Triple& t) {
        return std::make_tuple(t.a.kind, t.a.index, t.b.index, t.c.index, t.b.kind, t.c.kind);
    };
    std::sort(out.begin(), out.end(), [&](const Triple& l, const Triple& r) { return key(l) < key(r); });
    return Presentation(n_, field_, std::move(out));
}

bool validate_nilpotent_presentation(const Presentation& p)
{
    for (const auto& t : p.triples()) {
        if (!t.b.is_y() || !t.c.is_y())
            return false;
        if (!(t.a.index < t.b.index && t.b.index < t.c.index))
            return false;
    }
    return true;
}

}  // namespace saa
