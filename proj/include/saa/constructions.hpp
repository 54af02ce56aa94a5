#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saa/algebra.hpp"
#include "saa/presentation.hpp"

namespace saa {

// ------------------------------------------------------------------ Omega

/// Omega(0) = 0, Omega(1) = 2, Omega(m+1) = 2 + C(Omega(m), 2).
/// Throws std::overflow_error once the value leaves 64 bits (m > 8).
std::uint64_t omega(int m);

struct OmegaTable {
    std::vector<std::uint64_t> values;  // Omega(0..m_max)

    static OmegaTable up_to(int m_max);
};

enum class MinimalCase { One, Two };

std::string to_string(MinimalCase c);

/// Predicted least class of a rank-2 nilpotent algebra of dimension 2n:
/// with Omega(m) < n <= Omega(m+1), the class is 2m+1 when
/// 2n <= Omega(m) + Omega(m+1) and 2m+2 otherwise.
struct ClassPrediction {
    int n;
    int m;
    MinimalCase which;
    int predicted_class;
};

/// Throws std::invalid_argument for n < 4.
ClassPrediction predict_min_class(int n);

// ------------------------------------------------------------------ T^(3)

/// A generating triple (u, v, w) with value 1: u is the generator, (v, w) its
/// pair of y's.
using GeneratorTriple = std::array<BasisVector, 3>;

struct TripleSet {
    int n;
    int m;
    MinimalCase which;
    std::vector<GeneratorTriple> triples;
};

/// Human-readable descriptions of every violated structural property of the
/// triple set (shell bijections, no two triples sharing two entries,
/// coverage of x_{n-2}, ..., x_1, y_1, ..., y_n, generator ranges). Empty
/// when all hold.
std::vector<std::string> triple_set_violations(const TripleSet& ts);

struct MinimalConstruction {
    ClassPrediction prediction;
    TripleSet triples;
    Presentation presentation;
    int verified_class;
    int verified_rank;
};

/// Builds the all-ones presentation on T^(3) for the case chosen by
/// predict_min_class and verifies it: nilpotent shape, triple-set
/// properties, rank 2, centre of dimension 2 and class equal to the
/// prediction. Throws std::invalid_argument for n < 4 and std::logic_error
/// if verification fails.
MinimalConstruction construct_minimal(int n, PrimeField field = PrimeField(3));

// ------------------------------------------------------------------ catalog

struct CatalogEntry {
    std::string name;
    std::optional<FieldElement> parameter;
    Presentation presentation;
    int expected_class;
    int expected_rank;
};

/// "P8-2-1", "P10-2-1", "P10-2-2", "P12-2-1", "P14-2-1", "P16-2-1".
const std::vector<std::string>& catalog_names();
bool catalog_is_parameterized(std::string_view name);

/// Parameterized entries default to r = 1; r must be nonzero mod p. Passing
/// r to an unparameterized entry, an unknown name or r = 0 throws
/// std::invalid_argument.
CatalogEntry catalog_entry(std::string_view name, PrimeField field = PrimeField(3),
                           std::optional<std::int64_t> r = std::nullopt);

/// All six entries, parameterized ones at r = 1.
std::vector<CatalogEntry> catalog(PrimeField field = PrimeField(3));

// ------------------------------------------------------------------ isomorphism

/// phi(x_i) = scale_i x_{perm_i}, phi(y_i) = scale_i^{-1} y_{perm_i}.
/// Indices are 1-based; phi preserves the standard form.
struct BasisChange {
    std::vector<int> permutation;
    std::vector<FieldElement> scales;

    static BasisChange identity(PrimeField field, int n);
    friend bool operator==(const BasisChange&, const BasisChange&) = default;
};

/// Push-forward of gamma under phi: gamma'(phi u, phi v, phi w) = gamma(u, v, w).
/// phi is an isomorphism from the source algebra to the target algebra
/// exactly when the push-forward equals the target tensor.
StructureTensor transform_tensor(const StructureTensor& t, const BasisChange& phi);

struct SearchBudget {
    std::uint64_t max_candidates = 50'000'000;
    /// Also range over index permutations (lexicographic order).
    bool permutations = false;
    unsigned workers = 1;
};

struct ScalingSearch {
    std::optional<BasisChange> witness;
    std::uint64_t examined = 0;
    /// True when every candidate of the search space was examined.
    bool complete = false;
};

/// Searches monomial symplectic maps (diagonal scalings, optionally composed
/// with index permutations) taking a's tensor to b's. Candidates are ordered
/// lexicographically (permutation first, then scales with a_1 most
/// significant); the first witness in that order is returned whatever the
/// worker count. A witness is re-verified on the full tensor before return.
/// Absence of a witness proves nothing about non-isomorphism.
/// Throws std::invalid_argument on field or dimension mismatch.
ScalingSearch try_scaling_isomorphism(const Presentation& a, const Presentation& b, SearchBudget budget = {});

// ------------------------------------------------------------------ fingerprint

/// Isomorphism invariants; unequal fingerprints certify non-isomorphism.
struct Fingerprint {
    std::vector<std::size_t> lower_dims;
    std::vector<std::size_t> upper_dims;
    std::size_t square_of_square_dim = 0;  // dim L^2 L^2
    std::vector<bool> lower_isotropic;
    std::optional<int> nilpotency_class;
    std::optional<int> rank;

    std::string to_string() const;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Algebra& alg);

}  // namespace saa
