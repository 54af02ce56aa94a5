#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "saa/algebra.hpp"
#include "saa/linalg.hpp"

namespace saa {

/// Raised by operations whose precondition is a nilpotent algebra.
class NotNilpotentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Span of {u.v : u in basis(a), v in basis(b)}.
Subspace product_space(const Algebra& alg, const Subspace& a, const Subspace& b);

/// {v : v.L is contained in s}.
Subspace preimage_into(const Algebra& alg, const Subspace& s);

/// L^1 = L, L^{i+1} = L^i L, listed until the first repeated term. The last
/// entry is {0} exactly when the algebra is nilpotent.
std::vector<Subspace> lower_central_series(const Algebra& alg);

/// Z_0 = {0}, Z_{i+1} = {x : xL in Z_i}, listed until the first repeated term.
std::vector<Subspace> upper_central_series(const Algebra& alg);

/// Both central series of an algebra together with class and rank.
struct SeriesReport {
    std::vector<Subspace> lower;  // L^1, L^2, ...
    std::vector<Subspace> upper;  // Z_0, Z_1, ...
    std::optional<int> nilpotency_class;
    std::optional<int> rank;

    /// L^i for i >= 1, with L^0 taken as L; indices past the end repeat the
    /// stable last term.
    const Subspace& lower_term(int i) const;
    /// Z_i for i >= 0; indices past the end repeat the stable last term.
    const Subspace& upper_term(int i) const;

    std::vector<std::size_t> lower_dims() const;
    std::vector<std::size_t> upper_dims() const;
};

SeriesReport central_series(const Algebra& alg);

/// Least k with L^{k+1} = 0; empty for non-nilpotent algebras.
std::optional<int> nilpotency_class(const Algebra& alg);

/// dim L - dim L^2, cross-checked against dim Z(L). Throws
/// NotNilpotentError for non-nilpotent input and std::logic_error if the
/// two routes disagree.
int rank(const Algebra& alg);

bool is_ideal(const Algebra& alg, const Subspace& s);
/// s is contained in its own perp.
bool is_isotropic(const Algebra& alg, const Subspace& s);
/// s s = {0}.
bool is_abelian(const Algebra& alg, const Subspace& s);

/// An ascending chain {0} = I_0 < I_1 < ... < I_n of isotropic ideals with
/// dim I_r = r.
struct IsotropicChain {
    std::vector<Subspace> terms;
    /// False when the greedy extension order failed the centrality check and
    /// the backtracking search produced the chain instead.
    bool greedy = true;
};

/// Builds the chain by extending I with the first admissible v in perp(I)
/// with v.L in I and v not in I. Candidates are tried in the order
/// x_n, ..., x_1, y_1, ..., y_n, then the canonical basis rows of the
/// admissible subspace. For 2n >= 6 the chain
///   {0} < I_2 < ... < I_{n-1} < perp(I_{n-1}) < ... < perp(I_2) < L
/// is checked to be central. Throws NotNilpotentError if no admissible
/// extension exists.
IsotropicChain isotropic_ideal_chain(const Algebra& alg);

/// The doubled chain above, for checking centrality.
std::vector<Subspace> doubled_chain(const Algebra& alg, const std::vector<Subspace>& chain);
/// Every term times L lands in the previous term.
bool is_central_chain(const Algebra& alg, const std::vector<Subspace>& chain);

/// For an algebra given by a nilpotent presentation with 2n >= 8:
/// x_i y_{i+1} != 0 for i = 2..n-2, and x_1 y_2, y_1 y_2 linearly
/// independent. Throws std::invalid_argument below dimension 8 or when the
/// tensor is not of nilpotent shape.
bool is_maximal_class_criterion(const Algebra& alg);

class NotMaximalClassError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// For class 2n-3 and 2n >= 8: L^k = perp(Z_{k-1}) = Z_{2n-k-2} for
/// 0 <= k <= 2n-3 (L^0 = L, Z_{-1} = {0}). Throws NotMaximalClassError when
/// the precondition fails.
bool maximal_class_structure_check(const Algebra& alg);

}  // namespace saa
