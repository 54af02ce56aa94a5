#include <sstream>

#include "saa/io.hpp"
#include "saa/verify.hpp"

namespace saa {

namespace {

std::string name(std::size_t c)
{
    return BasisVector::from_coordinate(c).to_string();
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}

CheckResult make(std::string check, std::string subject)
{
    CheckResult r;
    r.check_name = std::move(check);
    r.subject = std::move(subject);
    return r;
}

CheckResult& fail(CheckResult& r, const Algebra& alg, std::string details)
{
    r.passed = false;
    r.details = std::move(details);
    r.witness = emit_presentation(alg.presentation());
    return r;
}

SeriesReport nilpotent_series(const Algebra& alg, const char* check)
{
    auto s = central_series(alg);
    if (!s.nilpotency_class)
        throw NotNilpotentError(std::string(check) + " needs a nilpotent algebra");
    return s;
}

}  // namespace

CheckResult check_axioms(const Algebra& alg, std::string subject)
{
    auto r = make("axioms", std::move(subject));
    const std::size_t d = alg.dim();
    const auto& f = alg.field();
    const auto& g = alg.form();
    auto pr = [&](std::size_t i, std::size_t j, std::size_t k) {
        return g.pair(alg.product(i, j), Vector::unit(f, d, k).coords());
    };

    Matrix gram = g.matrix();
    if (rref_in_place(gram).size() != d)
        return fail(r, alg, "form is degenerate");

    for (std::size_t i = 0; i < d; ++i) {
        if (!Vector(f, alg.product(i, i)).is_zero())
            return fail(r, alg, "alternation fails: " + name(i) + " " + name(i) + " != 0");
        for (std::size_t j = 0; j < d; ++j) {
            auto uv = alg.product(i, j);
            auto vu = alg.product(j, i);
            for (std::size_t c = 0; c < d; ++c)
                if (uv[c] != f.neg(vu[c]))
                    return fail(r, alg, "antisymmetry fails: " + name(i) + " " + name(j));
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto triple = "(" + name(i) + " " + name(j) + ", " + name(k) + ")";
                auto v = pr(i, j, k);
                if (v != alg.tensor().value(i, j, k))
                    return fail(r, alg, "table disagrees with tensor at " + triple);
                if (v != pr(j, k, i))
                    return fail(r, alg, "cyclic symmetry fails at " + triple);
                if (v != g.pair(Vector::unit(f, d, i).coords(), alg.product(k, j)))
                    return fail(r, alg, "self-adjointness fails at " + triple);
            }
    r.passed = true;
    r.details = std::to_string(d * d * d) + " basis triples";
    return r;
}

CheckResult check_duality(const Algebra& alg, std::string subject)
{
    auto r = make("duality", std::move(subject));
    auto s = nilpotent_series(alg, "duality check");
    const int c = *s.nilpotency_class;
    for (int i = 0; i <= c; ++i) {
        auto expected = perp(s.lower_term(i + 1), alg.form());
        if (!(s.upper_term(i) == expected))
            return fail(r, alg,
                        "Z_" + std::to_string(i) + " has dim " + std::to_string(s.upper_term(i).dim()) +
                            " but perp(L^" + std::to_string(i + 1) + ") has dim " + std::to_string(expected.dim()));
    }
    r.passed = true;
    r.details = "upper " + join(s.upper_dims()) + "; lower " + join(s.lower_dims());
    return r;
}

CheckResult check_series_growth_bound(const Algebra& alg, std::string subject)
{
    auto r = make("series_growth_bound", std::move(subject));
    auto s = nilpotent_series(alg, "series growth check");
    const int c = *s.nilpotency_class;
    auto z = [&](int i) { return static_cast<std::int64_t>(s.upper_term(i).dim()); };
    auto l = [&](int i) { return static_cast<std::int64_t>(s.lower_term(i).dim()); };
    for (int i = 2; i <= c; ++i) {
        auto lhs = 2 * (z(i) - z(i - 1));
        auto rhs = (z(i - 1) - z(i - 2)) * (z(i - 1) + z(i - 2) - 1);
        if (lhs > rhs)
            return fail(r, alg,
                        "step " + std::to_string(i) + ": " + std::to_string(lhs) + " > " + std::to_string(rhs));
    }
    for (int i = 1; i <= c; ++i)
        if (l(i) - l(i + 1) != z(i) - z(i - 1))
            return fail(r, alg, "mirror equality fails at step " + std::to_string(i));
    r.passed = true;
    r.details = "steps 2.." + std::to_string(c);
    return r;
}

CheckResult check_rank_two_facts(const Algebra& alg, std::string subject)
{
    auto r = make("rank_two_facts", std::move(subject));
    auto s = central_series(alg);
    if (!s.nilpotency_class)
        throw std::invalid_argument("rank-two facts need a nilpotent algebra");
    if (s.upper_term(1).dim() != 2)
        throw std::invalid_argument("rank-two facts need a centre of dimension 2");
    if (alg.dim() < 8)
        throw std::invalid_argument("rank-two facts need dimension at least 8");
    const auto d = static_cast<std::int64_t>(alg.dim());
    const int c = *s.nilpotency_class;
    auto l = [&](int i) { return static_cast<std::int64_t>(s.lower_term(i).dim()); };
    if (l(2) != d - 2)
        return fail(r, alg, "dim L^2 = " + std::to_string(l(2)));
    if (l(3) != d - 3)
        return fail(r, alg, "dim L^3 = " + std::to_string(l(3)));
    if (l(4) != d - 4 && l(4) != d - 5)
        return fail(r, alg, "dim L^4 = " + std::to_string(l(4)));
    if (!(s.lower_term(c) == s.upper_term(1)))
        return fail(r, alg, "L^" + std::to_string(c) + " differs from the centre");
    if (c < 5 || c > d - 3)
        return fail(r, alg, "class " + std::to_string(c) + " outside [5, " + std::to_string(d - 3) + "]");
    if (d >= 12 && c < 7)
        return fail(r, alg, "class " + std::to_string(c) + " below 7 at dimension " + std::to_string(d));
    r.passed = true;
    r.details = "lower " + join(s.lower_dims()) + "; class " + std::to_string(c);
    return r;
}

}  // namespace saa
