#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saa/algebra.hpp"
#include "saa/series.hpp"

namespace saa {

/// Outcome of one property check. A failed result carries the presentation
/// of its subject (and the sample seed for random subjects) so it can be
/// reproduced.
struct CheckResult {
    std::string check_name;
    std::string subject;
    bool passed = false;
    std::string details;
    std::string witness;  // emitted presentation; empty when passed
    std::optional<std::uint64_t> seed;
};

/// Alternation, antisymmetry, agreement of the table with the tensor, cyclic
/// symmetry (uv, w) = (vw, u), self-adjointness (uv, w) = (u, wv) and
/// non-degeneracy of the form. Exhaustive over basis triples; the first
/// failing triple is named in details.
CheckResult check_axioms(const Algebra& alg, std::string subject = "");

/// Z_i = perp(L^{i+1}) for 0 <= i <= class. Throws NotNilpotentError.
CheckResult check_duality(const Algebra& alg, std::string subject = "");

/// With z_i = dim Z_i:
///   2 (z_i - z_{i-1}) <= (z_{i-1} - z_{i-2}) (z_{i-1} + z_{i-2} - 1)  for 2 <= i <= class,
/// and dim L^i - dim L^{i+1} = z_i - z_{i-1} for 1 <= i <= class.
/// Throws NotNilpotentError.
CheckResult check_series_growth_bound(const Algebra& alg, std::string subject = "");

/// Facts forced on a nilpotent algebra with dim Z(L) = 2 and 2n >= 8:
/// dim L^2 = 2n-2, dim L^3 = 2n-3, dim L^4 in {2n-4, 2n-5}, L^c = Z(L) for
/// the class c, 5 <= c <= 2n-3, and c >= 7 once 2n >= 12.
/// Throws std::invalid_argument when the preconditions fail.
CheckResult check_rank_two_facts(const Algebra& alg, std::string subject = "");

// ------------------------------------------------------------------ sampling

/// SplitMix64 (Steele, Lea, Flood 2014). Small, seedable, and splittable by
/// seeding a fresh generator from a hash of (seed, index).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Generator for sample `index` of the stream `seed`.
    static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_;
};

/// Every (x_i, y_j, y_k) and (y_i, y_j, y_k) with i < j < k gets an
/// independent uniform value in GF(p), zero included. Triples are drawn in
/// order of (i, j, k), x before y.
Presentation random_nilpotent_presentation(int n, PrimeField field, SplitMix64& rng);

struct ScanConfig {
    int n = 4;
    std::uint64_t p = 3;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    /// Only samples of this rank are classified; others are drawn and skipped.
    std::optional<int> rank_filter;
};

struct ScanDiscovery {
    std::uint64_t index;
    std::string kind;
    std::string detail;
    std::string presentation;
};

struct ScanReport {
    ScanConfig config;
    std::uint64_t drawn = 0;
    std::uint64_t classified = 0;
    std::map<std::pair<int, int>, std::uint64_t> by_rank_and_class;
    std::uint64_t rank2 = 0;
    std::optional<int> rank2_min_class;
    std::optional<int> predicted_min_class;  // n >= 4
    std::uint64_t rank2_below_prediction = 0;
    std::uint64_t rank2_outside_bounds = 0;  // outside [5, 2n-3]
    std::uint64_t criterion_mismatches = 0;  // criterion vs class = 2n-3
    std::uint64_t check_failures = 0;
    std::vector<ScanDiscovery> discoveries;  // sorted by index

    /// Samples of rank 2 with class at most k.
    std::uint64_t rank2_at_most(int k) const;
    std::string render() const;
};

/// Draws cfg.samples presentations (sample i uses SplitMix64::for_sample(seed,
/// i)), classifies those passing the rank filter, runs the duality and growth
/// checks on each and the rank-two checks on rank-2 samples. Anything
/// contradicting a bound is recorded as a discovery, not thrown. The report
/// is identical for every worker count. Throws std::invalid_argument for a
/// non-prime p, n < 1 or zero samples.
ScanReport scan(const ScanConfig& cfg, unsigned workers = 1);

}  // namespace saa
