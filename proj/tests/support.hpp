#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "saa/algebra.hpp"
#include "saa/constructions.hpp"
#include "saa/verify.hpp"

namespace saa::test {

inline Algebra catalog_algebra(const std::string& name, std::uint64_t p = 3, std::optional<std::int64_t> r = {})
{
    return Algebra::build(catalog_entry(name, PrimeField(p), r).presentation);
}

/// Random presentation with arbitrary distinct basis vectors (not of
/// nilpotent shape in general).
inline Presentation random_general_presentation(int n, PrimeField f, SplitMix64& rng, int max_triples)
{
    const auto d = static_cast<std::uint64_t>(2 * n);
    std::vector<Triple> out;
    if (d < 3)
        return Presentation(n, f);
    std::vector<std::array<std::size_t, 3>> used;
    auto count = rng.below(static_cast<std::uint64_t>(max_triples) + 1);
    for (std::uint64_t t = 0; t < count; ++t) {
        std::array<std::size_t, 3> c{};
        do {
            for (auto& x : c)
                x = rng.below(d);
        } while (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]);
        auto key = c;
        std::sort(key.begin(), key.end());
        if (std::find(used.begin(), used.end(), key) != used.end())
            continue;
        used.push_back(key);
        auto v = 1 + static_cast<std::int64_t>(rng.below(f.p() - 1));
        out.push_back({BasisVector::from_coordinate(c[0]), BasisVector::from_coordinate(c[1]),
                       BasisVector::from_coordinate(c[2]), FieldElement(f, v)});
    }
    return Presentation(n, f, std::move(out));
}

/// Random nilpotent-shape algebra of rank 2, drawn from the scan stream.
inline std::vector<Presentation> rank_two_samples(int n, std::uint64_t p, std::uint64_t seed, std::size_t count)
{
    std::vector<Presentation> out;
    PrimeField f(p);
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        auto rng = SplitMix64::for_sample(seed, i);
        auto pres = random_nilpotent_presentation(n, f, rng);
        if (rank(Algebra::build(pres)) == 2)
            out.push_back(std::move(pres));
    }
    return out;
}

}  // namespace saa::test
