#include "doctest.h"
#include "saa/algebra.hpp"
#include "saa/io.hpp"
#include "support.hpp"

using namespace saa;

namespace {

// Solves (w, u_k) = rhs_k by plain elimination on [G^T | rhs], independent
// of the closed-form inversion the library uses.
Vector solve_by_elimination(const GramMatrix& g, const std::vector<Residue>& rhs)
{
    const auto& f = g.field();
    const std::size_t d = g.dim();
    Matrix aug(f, d, d + 1);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t c = 0; c < d; ++c)
            aug(k, c) = g.matrix()(c, k);
        aug(k, d) = rhs[k];
    }
    auto pivots = rref_in_place(aug);
    REQUIRE(pivots.size() == d);
    Vector w(f, d);
    for (std::size_t r = 0; r < d; ++r)
        w[pivots[r]] = aug(r, d);
    return w;
}

}  // namespace

TEST_CASE("y4 y5 = -y3 in P10-2-1")
{
    auto alg = test::catalog_algebra("P10-2-1");
    auto prod = alg.multiply(alg.basis(BasisVector::y(4)), alg.basis(BasisVector::y(5)));
    CHECK(prod == -alg.basis(BasisVector::y(3)));

    std::vector<Residue> rhs;
    for (std::size_t k = 0; k < alg.dim(); ++k)
        rhs.push_back(alg.tensor().value(BasisVector::y(4).coordinate(), BasisVector::y(5).coordinate(), k));
    CHECK(solve_by_elimination(alg.form(), rhs) == prod);
}

TEST_CASE("every product in the catalog matches the elimination solve")
{
    for (const auto& entry : catalog(PrimeField(5))) {
        auto alg = Algebra::build(entry.presentation);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                std::vector<Residue> rhs;
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    rhs.push_back(alg.tensor().value(i, j, k));
                CHECK(solve_by_elimination(alg.form(), rhs) == Vector(alg.field(), alg.product(i, j)));
            }
    }
}

TEST_CASE("presentation validation")
{
    PrimeField f(3);
    auto t = [&](BasisVector a, BasisVector b, BasisVector c, int v = 1) { return Triple{a, b, c, FieldElement(f, v)}; };
    using B = BasisVector;
    CHECK_THROWS_AS(Presentation(2, f, {t(B::x(1), B::x(1), B::y(2))}), PresentationError);
    CHECK_THROWS_AS(Presentation(2, f, {t(B::x(1), B::y(2), B::y(3))}), PresentationError);
    CHECK_THROWS_AS(Presentation(3, f, {t(B::x(1), B::y(2), B::y(3)), t(B::y(3), B::x(1), B::y(2), 2)}),
                    PresentationError);
    CHECK_THROWS_AS(Presentation(3, f, {Triple{B::x(1), B::y(2), B::y(3), FieldElement(PrimeField(5), 1)}}),
                    PresentationError);
    CHECK_THROWS(Presentation(0, f));
    CHECK_NOTHROW(Presentation(3, f, {t(B::x(1), B::y(2), B::y(3))}));
}

TEST_CASE("canonical form sorts entries with sign and drops zeros")
{
    PrimeField f(5);
    using B = BasisVector;
    Presentation p(3, f,
                   {{B::y(3), B::y(2), B::x(1), FieldElement(f, 1)},  // odd permutation of (x1 y2, y3)
                    {B::y(1), B::y(2), B::y(3), FieldElement(f, 0)}});
    auto c = p.canonical();
    REQUIRE(c.triples().size() == 1);
    CHECK(c.triples()[0] == Triple{B::x(1), B::y(2), B::y(3), FieldElement(f, 4)});
    CHECK(Algebra::build(p).tensor() == Algebra::build(c).tensor());
    CHECK(validate_nilpotent_presentation(c));
    CHECK(!validate_nilpotent_presentation(p));
}

TEST_CASE("algebra recovers its presentation")
{
    for (const auto& entry : catalog(PrimeField(7)))
        CHECK(Algebra::build(entry.presentation).presentation() == entry.presentation.canonical());
}

TEST_CASE("random general presentations satisfy the axioms")
{
    SplitMix64 rng(7);
    int checked = 0;
    for (std::uint64_t p : {2, 3, 5, 7})
        for (int trial = 0; trial < 125; ++trial) {
            auto pres = test::random_general_presentation(1 + static_cast<int>(rng.below(4)), PrimeField(p), rng, 8);
            auto r = check_axioms(Algebra::build(pres));
            CHECK_MESSAGE(r.passed, r.details);
            ++checked;
        }
    CHECK(checked == 500);
}

TEST_CASE("from_table round-trips a valid algebra and exposes a corrupted one")
{
    auto alg = test::catalog_algebra("P8-2-1");
    std::vector<Vector> table;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            table.emplace_back(alg.field(), alg.product(i, j));
    auto same = Algebra::from_table(alg.field(), alg.n(), table);
    CHECK(same.tensor() == alg.tensor());
    CHECK(check_axioms(same).passed);

    // Keep antisymmetry but add x4 to x1 y2 only: (x1 y2, y4) becomes 1
    // while (y2 y4, x1) stays 0.
    auto x1 = BasisVector::x(1).coordinate(), y2 = BasisVector::y(2).coordinate();
    auto bump = Vector::unit(alg.field(), alg.dim(), BasisVector::x(4).coordinate());
    table[x1 * alg.dim() + y2] += bump;
    table[y2 * alg.dim() + x1] -= bump;
    auto broken = check_axioms(Algebra::from_table(alg.field(), alg.n(), table), "corrupt");
    CHECK(!broken.passed);
    CHECK(broken.subject == "corrupt");
    CHECK(broken.details.find("(") != std::string::npos);
    CHECK(broken.witness.rfind("saa-presentation v1", 0) == 0);
}

TEST_CASE("multiply and form reject mismatched inputs")
{
    auto alg = test::catalog_algebra("P8-2-1");
    Vector short_v(alg.field(), 3);
    CHECK_THROWS_AS(multiply(alg, short_v, short_v), std::invalid_argument);
    Vector other(PrimeField(5), alg.dim());
    CHECK_THROWS_AS(form(alg, other, other), std::invalid_argument);
}
