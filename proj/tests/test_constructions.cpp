#include "doctest.h"
#include "saa/constructions.hpp"
#include "saa/series.hpp"
#include "support.hpp"

using namespace saa;

TEST_CASE("omega table")
{
    std::vector<std::uint64_t> expected{0, 2, 3, 5, 12, 68, 2280};
    CHECK(OmegaTable::up_to(6).values == expected);
    CHECK(omega(7) == 2 + 2280ULL * 2279 / 2);
    CHECK_NOTHROW(omega(8));
    CHECK_THROWS_AS(omega(9), std::overflow_error);
    CHECK_THROWS(omega(-1));
}

TEST_CASE("predicted least class for n = 4..12")
{
    std::vector<int> expected{5, 6, 7, 7, 7, 8, 8, 8, 8};
    for (int n = 4; n <= 12; ++n)
        CHECK(predict_min_class(n).predicted_class == expected[static_cast<std::size_t>(n - 4)]);
    auto p8 = predict_min_class(8);
    CHECK(p8.m == 3);
    CHECK(p8.which == MinimalCase::One);
    CHECK(predict_min_class(5).which == MinimalCase::Two);
    CHECK(predict_min_class(13).predicted_class == 9);   // Omega(4) = 12 < 13 <= 68, 26 <= 80
    CHECK(predict_min_class(41).predicted_class == 10);  // 82 > 80
    CHECK_THROWS_AS(predict_min_class(3), std::invalid_argument);
}

TEST_CASE("minimal constructions verify for n = 4..12 over small primes")
{
    for (std::uint64_t p : {2, 3, 5, 7})
        for (int n = 4; n <= 12; ++n) {
            auto c = construct_minimal(n, PrimeField(p));
            CHECK(c.verified_rank == 2);
            CHECK(c.verified_class == predict_min_class(n).predicted_class);
            CHECK(triple_set_violations(c.triples).empty());
            CHECK(validate_nilpotent_presentation(c.presentation));
            auto s = central_series(Algebra::build(c.presentation));
            CHECK(s.nilpotency_class == c.verified_class);
        }
    CHECK_THROWS_AS(construct_minimal(3), std::invalid_argument);
}

TEST_CASE("tampered triple sets are reported")
{
    auto ts = construct_minimal(8).triples;
    REQUIRE(ts.triples.size() >= 2);
    auto dup = ts;
    dup.triples.push_back(dup.triples.front());
    CHECK(!triple_set_violations(dup).empty());
    auto dropped = ts;
    dropped.triples.erase(dropped.triples.begin());
    CHECK(!triple_set_violations(dropped).empty());
}

TEST_CASE("catalog")
{
    CHECK(catalog_names().size() == 6);
    auto p10 = catalog_entry("P10-2-2", PrimeField(3), 1);
    CHECK(p10.presentation.triples().size() == 4);
    bool found = false;
    for (const auto& t : p10.presentation.triples())
        found = found || (t.a == BasisVector::x(3) && t.b == BasisVector::y(4) && t.c == BasisVector::y(5) &&
                          t.value.residue() == 1);
    CHECK(found);
    CHECK_THROWS_AS(catalog_entry("P10-2-1", PrimeField(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(catalog_entry("P8-2-1", PrimeField(3), 3), std::invalid_argument);  // r = 0 mod 3
    CHECK_THROWS_AS(catalog_entry("P9-2-1"), std::invalid_argument);
    for (const auto& e : catalog(PrimeField(3))) {
        auto s = central_series(Algebra::build(e.presentation));
        CHECK(s.nilpotency_class == e.expected_class);
        CHECK(s.rank == e.expected_rank);
    }
}

TEST_CASE("transform_tensor by the identity and by a composite change")
{
    PrimeField f(7);
    auto alg = test::catalog_algebra("P8-2-1", 7);
    CHECK(transform_tensor(alg.tensor(), BasisChange::identity(f, 4)) == alg.tensor());
    BasisChange phi{{2, 1, 4, 3}, {FieldElement(f, 3), FieldElement(f, 5), FieldElement(f, 1), FieldElement(f, 6)}};
    auto pushed = transform_tensor(alg.tensor(), phi);
    // Pushing the result back along phi^{-1} recovers the source.
    BasisChange inv{{2, 1, 4, 3}, {FieldElement(f, 5).inverse(), FieldElement(f, 3).inverse(), FieldElement(f, 6).inverse(),
                                   FieldElement(f, 1)}};
    CHECK(transform_tensor(pushed, inv) == alg.tensor());
    CHECK_THROWS(transform_tensor(alg.tensor(), BasisChange{{1, 1, 2, 3}, phi.scales}));
    CHECK_THROWS(transform_tensor(alg.tensor(), BasisChange{{1, 2, 3, 4}, {FieldElement(f, 0), phi.scales[1],
                                                                             phi.scales[2], phi.scales[3]}}));
}

TEST_CASE("scaling isomorphisms between P8(r) over GF(7)")
{
    PrimeField f(7);
    auto p8 = [&](int r) { return catalog_entry("P8-2-1", f, r).presentation; };
    // Witness frozen from tests/oracle/saa_oracle.py scaling 7 P8(1) P8(6).
    auto hit = try_scaling_isomorphism(p8(1), p8(6));
    REQUIRE(hit.witness);
    CHECK(hit.witness->permutation == std::vector<int>{1, 2, 3, 4});
    std::vector<Residue> scales;
    for (const auto& s : hit.witness->scales)
        scales.push_back(s.residue());
    CHECK(scales == std::vector<Residue>{1, 3, 5, 5});
    CHECK(transform_tensor(Algebra::build(p8(1)).tensor(), *hit.witness) == Algebra::build(p8(6)).tensor());

    // r = 3 is not a cube times 1 mod 7 (cubes are {1, 6}).
    auto miss = try_scaling_isomorphism(p8(1), p8(3));
    CHECK(!miss.witness);
    CHECK(miss.complete);
    CHECK(miss.examined == 6 * 6 * 6 * 6);

    for (unsigned w : {2u, 3u, 8u}) {
        SearchBudget b;
        b.workers = w;
        auto par = try_scaling_isomorphism(p8(1), p8(6), b);
        REQUIRE(par.witness);
        CHECK(*par.witness == *hit.witness);
        CHECK(par.examined == hit.examined);
    }

    SearchBudget tiny;
    tiny.max_candidates = 10;
    auto cut = try_scaling_isomorphism(p8(1), p8(3), tiny);
    CHECK(!cut.complete);
    CHECK(cut.examined == 10);

    SearchBudget perms;
    perms.permutations = true;
    auto with_perms = try_scaling_isomorphism(p8(1), p8(6), perms);
    REQUIRE(with_perms.witness);
    CHECK(*with_perms.witness == *hit.witness);

    CHECK_THROWS_AS(try_scaling_isomorphism(p8(1), catalog_entry("P8-2-1", PrimeField(5)).presentation),
                    std::invalid_argument);
}

TEST_CASE("fingerprints separate P10-2-1 from P10-2-2(1)")
{
    auto a = fingerprint(test::catalog_algebra("P10-2-1"));
    auto b = fingerprint(test::catalog_algebra("P10-2-2", 3, 1));
    // Frozen from tests/oracle/saa_oracle.py fingerprint.
    CHECK(a.lower_dims == std::vector<std::size_t>{10, 8, 7, 5, 3, 2, 0});
    CHECK(a.lower_dims == b.lower_dims);
    CHECK(a.upper_dims == b.upper_dims);
    CHECK(a.square_of_square_dim == 2);
    CHECK(b.square_of_square_dim == 5);
    CHECK(a.lower_isotropic == std::vector<bool>{false, false, false, true, true, true, true});
    CHECK(a.lower_isotropic == b.lower_isotropic);
    CHECK(!(a == b));
    CHECK(a.to_string() == "lower=10,8,7,5,3,2,0 upper=0,2,3,5,7,8,10 square2=2 isotropic=0001111 class=6 rank=2");
}

TEST_CASE("prediction is monotone and Omega strictly increasing")
{
    int prev = 0;
    for (int n = 4; n <= 68; ++n) {
        int k = predict_min_class(n).predicted_class;
        CHECK(k >= prev);
        prev = k;
    }
    for (int m = 1; m < 8; ++m)
        CHECK(omega(m + 1) > omega(m));
}

TEST_CASE("catalog over GF(5) and equal inputs")
{
    for (const auto& e : catalog(PrimeField(5))) {
        auto alg = Algebra::build(e.presentation);
        auto s = central_series(alg);
        CHECK(s.nilpotency_class == e.expected_class);
        CHECK(s.rank == e.expected_rank);
        CHECK(is_isotropic(alg, s.upper_term(1)));
        auto self = try_scaling_isomorphism(e.presentation, e.presentation);
        REQUIRE(self.witness);
        CHECK(*self.witness == BasisChange::identity(PrimeField(5), e.presentation.n()));
        CHECK(self.examined == 1);
    }
    CHECK(fingerprint(test::catalog_algebra("P12-2-1")) == fingerprint(test::catalog_algebra("P12-2-1")));
    auto abelian = fingerprint(Algebra::build(Presentation(4, PrimeField(3))));
    auto p8 = fingerprint(test::catalog_algebra("P8-2-1"));
    CHECK(!(abelian == p8));
    CHECK(abelian.nilpotency_class == 1);
    CHECK(p8.nilpotency_class == 5);
}
