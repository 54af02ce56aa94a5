#include "doctest.h"
#include "saa/series.hpp"
#include "support.hpp"

using namespace saa;

namespace {

using Dims = std::vector<std::size_t>;

Algebra first_non_nilpotent()
{
    SplitMix64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto alg = Algebra::build(test::random_general_presentation(3, PrimeField(3), rng, 10));
        if (!nilpotency_class(alg))
            return alg;
    }
    FAIL("no non-nilpotent sample drawn");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("central series of P8(1)")
{
    // Frozen from tests/oracle/saa_oracle.py series catalog/P8-2-1.saa
    auto s = central_series(test::catalog_algebra("P8-2-1"));
    CHECK(s.lower_dims() == Dims{8, 6, 5, 3, 2, 0});
    CHECK(s.upper_dims() == Dims{0, 2, 3, 5, 6, 8});
    CHECK(s.nilpotency_class == 5);
    CHECK(s.rank == 2);
}

TEST_CASE("central series of the larger catalog algebras")
{
    // Frozen from the oracle.
    CHECK(central_series(test::catalog_algebra("P12-2-1")).lower_dims() == Dims{12, 10, 9, 7, 5, 3, 2, 0});
    CHECK(central_series(test::catalog_algebra("P14-2-1")).upper_dims() == Dims{0, 2, 3, 5, 9, 11, 12, 14});
    CHECK(central_series(test::catalog_algebra("P16-2-1")).lower_dims() == Dims{16, 14, 13, 11, 5, 3, 2, 0});
}

TEST_CASE("abelian algebra")
{
    auto alg = Algebra::build(Presentation(2, PrimeField(3)));
    CHECK(nilpotency_class(alg) == 1);
    CHECK(rank(alg) == 4);
    auto chain = isotropic_ideal_chain(alg);
    REQUIRE(chain.terms.size() == 3);
    const auto& f = alg.field();
    CHECK(chain.terms[1] == Subspace::span(f, 4, {alg.basis(BasisVector::x(2))}));
    CHECK(chain.terms[2] == Subspace::span(f, 4, {alg.basis(BasisVector::x(2)), alg.basis(BasisVector::x(1))}));
    CHECK(chain.greedy);
}

TEST_CASE("ideals and isotropy")
{
    auto alg = test::catalog_algebra("P8-2-1");
    const auto& f = alg.field();
    CHECK(!is_ideal(alg, Subspace::span(f, 8, {alg.basis(BasisVector::y(1))})));
    auto s = central_series(alg);
    for (const auto& t : s.lower)
        CHECK(is_ideal(alg, t));
    for (const auto& t : s.upper)
        CHECK(is_ideal(alg, t));
    CHECK(is_isotropic(alg, s.upper_term(1)));
    CHECK(!is_isotropic(alg, Subspace::full(f, 8)));
    CHECK(is_abelian(alg, s.upper_term(1)));
    CHECK(!is_abelian(alg, Subspace::full(f, 8)));
}

TEST_CASE("isotropic ideal chains on catalog and constructed algebras")
{
    std::vector<Algebra> algebras;
    for (const auto& e : catalog(PrimeField(3)))
        algebras.push_back(Algebra::build(e.presentation));
    for (int n = 4; n <= 9; ++n)
        algebras.push_back(Algebra::build(construct_minimal(n).presentation));
    for (const auto& alg : algebras) {
        auto chain = isotropic_ideal_chain(alg);
        REQUIRE(chain.terms.size() == static_cast<std::size_t>(alg.n()) + 1);
        for (std::size_t r = 0; r < chain.terms.size(); ++r) {
            CHECK(chain.terms[r].dim() == r);
            CHECK(is_ideal(alg, chain.terms[r]));
            CHECK(is_isotropic(alg, chain.terms[r]));
            if (r)
                CHECK(chain.terms[r].contains(chain.terms[r - 1]));
        }
        CHECK(is_central_chain(alg, doubled_chain(alg, chain.terms)));
    }
}

TEST_CASE("non-nilpotent algebras are rejected where nilpotency is required")
{
    auto alg = first_non_nilpotent();
    CHECK(!central_series(alg).nilpotency_class);
    CHECK(!central_series(alg).rank);
    CHECK_THROWS_AS(rank(alg), NotNilpotentError);
    CHECK_THROWS_AS(isotropic_ideal_chain(alg), NotNilpotentError);
    CHECK_THROWS_AS(check_duality(alg), NotNilpotentError);
    CHECK_THROWS_AS(check_series_growth_bound(alg), NotNilpotentError);
    CHECK(check_axioms(alg).passed);
}

TEST_CASE("maximal class at dimension 8")
{
    for (int r : {1, 2}) {
        auto alg = test::catalog_algebra("P8-2-1", 3, r);
        CHECK(is_maximal_class_criterion(alg));
        CHECK(maximal_class_structure_check(alg));
    }
    auto p10 = test::catalog_algebra("P10-2-1");
    CHECK(!is_maximal_class_criterion(p10));
    CHECK_THROWS_AS(maximal_class_structure_check(p10), NotMaximalClassError);
    CHECK_THROWS_AS(is_maximal_class_criterion(Algebra::build(Presentation(3, PrimeField(3)))),
                    std::invalid_argument);
    CHECK_THROWS_AS(maximal_class_structure_check(Algebra::build(Presentation(3, PrimeField(3)))),
                    NotMaximalClassError);
}

TEST_CASE("maximal class criterion agrees with the class on random rank-2 samples")
{
    for (int n : {4, 5}) {
        int maximal = 0;
        for (const auto& pres : test::rank_two_samples(n, 3, 99, 200)) {
            auto alg = Algebra::build(pres);
            bool top = nilpotency_class(alg) == 2 * n - 3;
            maximal += top;
            CHECK(is_maximal_class_criterion(alg) == top);
            if (top)
                CHECK(maximal_class_structure_check(alg));
        }
        CHECK(maximal > 0);
    }
}
