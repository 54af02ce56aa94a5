#include "saa/series.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace saa {

Subspace product_space(const Algebra& alg, const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim() || !(a.field() == alg.field()) ||
        !(b.field() == alg.field()))
        throw std::invalid_argument("subspace does not live in the algebra");
    const std::size_t d = alg.dim();
    const auto& f = alg.field();
    const bool b_full = b.dim() == d;
    Matrix rows(f, 0, d);
    std::vector<Residue> acc(d);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix right = alg.right_products(a.basis().row(i));
        if (b_full) {
            for (std::size_t k = 0; k < d; ++k)
                rows.append_row(right.row(k));
            continue;
        }
        for (std::size_t j = 0; j < b.dim(); ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            auto v = b.basis().row(j);
            for (std::size_t k = 0; k < d; ++k) {
                if (v[k] == 0)
                    continue;
                auto r = right.row(k);
                for (std::size_t c = 0; c < d; ++c)
                    if (r[c] != 0)
                        acc[c] = f.add(acc[c], f.mul(v[k], r[c]));
            }
            rows.append_row(acc);
        }
    }
    return Subspace::row_space(std::move(rows));
}

Subspace preimage_into(const Algebra& alg, const Subspace& s)
{
    const std::size_t d = alg.dim();
    if (s.ambient_dim() != d || !(s.field() == alg.field()))
        throw std::invalid_argument("subspace does not live in the algebra");
    const auto& f = alg.field();

    // Coordinates of the quotient L/s are the non-pivot columns of s.
    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> pivot(d, false);
        for (auto p : s.pivots())
            pivot[p] = true;
        for (std::size_t c = 0; c < d; ++c)
            if (!pivot[c])
                free_cols.push_back(c);
    }
    if (free_cols.empty())
        return Subspace::full(f, d);

    // Row j of the map: the images (u_j u_k mod s) for every k, flattened.
    const std::size_t q = free_cols.size();
    Matrix map(f, d, d * q);
    std::vector<Residue> buf(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            auto prod = alg.product(j, k);
            std::copy(prod.begin(), prod.end(), buf.begin());
            s.reduce_in_place(buf);
            for (std::size_t c = 0; c < q; ++c)
                map(j, k * q + c) = buf[free_cols[c]];
        }
    // v lies in the preimage iff v^T map = 0.
    return Subspace::row_space(nullspace(map.transpose()));
}

std::vector<Subspace> lower_central_series(const Algebra& alg)
{
    const auto whole = Subspace::full(alg.field(), alg.dim());
    std::vector<Subspace> terms{whole};
    while (!terms.back().is_zero()) {
        auto next = product_space(alg, terms.back(), whole);
        if (next == terms.back())
            break;
        terms.push_back(std::move(next));
    }
    return terms;
}

std::vector<Subspace> upper_central_series(const Algebra& alg)
{
    std::vector<Subspace> terms{Subspace::zero(alg.field(), alg.dim())};
    while (terms.back().dim() != alg.dim()) {
        auto next = preimage_into(alg, terms.back());
        if (next == terms.back())
            break;
        terms.push_back(std::move(next));
    }
    return terms;
}

const Subspace& SeriesReport::lower_term(int i) const
{
    if (i <= 1)
        return lower.front();
    auto idx = static_cast<std::size_t>(i - 1);
    return idx < lower.size() ? lower[idx] : lower.back();
}

const Subspace& SeriesReport::upper_term(int i) const
{
    if (i < 0)
        throw std::out_of_range("upper central series index must be non-negative");
    auto idx = static_cast<std::size_t>(i);
    return idx < upper.size() ? upper[idx] : upper.back();
}

std::vector<std::size_t> SeriesReport::lower_dims() const
{
    std::vector<std::size_t> out;
    for (const auto& s : lower)
        out.push_back(s.dim());
    return out;
}

std::vector<std::size_t> SeriesReport::upper_dims() const
{
    std::vector<std::size_t> out;
    for (const auto& s : upper)
        out.push_back(s.dim());
    return out;
}

SeriesReport central_series(const Algebra& alg)
{
    SeriesReport r;
    r.lower = lower_central_series(alg);
    r.upper = upper_central_series(alg);
    if (r.lower.back().is_zero()) {
        r.nilpotency_class = static_cast<int>(r.lower.size()) - 1;
        r.rank = static_cast<int>(alg.dim() - r.lower[1].dim());
    }
    return r;
}

std::optional<int> nilpotency_class(const Algebra& alg)
{
    auto lower = lower_central_series(alg);
    if (!lower.back().is_zero())
        return std::nullopt;
    return static_cast<int>(lower.size()) - 1;
}

int rank(const Algebra& alg)
{
    auto lower = lower_central_series(alg);
    if (!lower.back().is_zero())
        throw NotNilpotentError("rank is defined for nilpotent algebras only");
    auto by_square = static_cast<int>(alg.dim() - lower[1].dim());
    auto center = preimage_into(alg, Subspace::zero(alg.field(), alg.dim()));
    if (static_cast<int>(center.dim()) != by_square)
        throw std::logic_error("dim L - dim L^2 = " + std::to_string(by_square) + " but dim Z(L) = " +
                               std::to_string(center.dim()));
    return by_square;
}

bool is_ideal(const Algebra& alg, const Subspace& s)
{
    return s.contains(product_space(alg, s, Subspace::full(alg.field(), alg.dim())));
}

bool is_isotropic(const Algebra& alg, const Subspace& s)
{
    if (s.ambient_dim() != alg.dim() || !(s.field() == alg.field()))
        throw std::invalid_argument("subspace does not live in the algebra");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (alg.form().pair(s.basis().row(i), s.basis().row(j)) != 0)
                return false;
    return true;
}

bool is_abelian(const Algebra& alg, const Subspace& s)
{
    return product_space(alg, s, s).is_zero();
}

std::vector<Subspace> doubled_chain(const Algebra& alg, const std::vector<Subspace>& chain)
{
    const auto n = static_cast<std::size_t>(alg.n());
    if (chain.size() != n + 1 || n < 3)
        throw std::invalid_argument("doubled chain needs I_0..I_n with 2n >= 6");
    std::vector<Subspace> out{chain[0]};
    for (std::size_t r = 2; r <= n - 1; ++r)
        out.push_back(chain[r]);
    for (std::size_t r = n - 1; r >= 2; --r)
        out.push_back(perp(chain[r], alg.form()));
    out.push_back(Subspace::full(alg.field(), alg.dim()));
    return out;
}

bool is_central_chain(const Algebra& alg, const std::vector<Subspace>& chain)
{
    const auto whole = Subspace::full(alg.field(), alg.dim());
    for (std::size_t s = 1; s < chain.size(); ++s)
        if (!chain[s - 1].contains(product_space(alg, chain[s], whole)))
            return false;
    return true;
}

namespace {

std::vector<Vector> chain_candidates(const Algebra& alg, const Subspace& admissible)
{
    std::vector<Vector> out;
    for (int i = alg.n(); i >= 1; --i)
        out.push_back(alg.basis(BasisVector::x(i)));
    for (int i = 1; i <= alg.n(); ++i)
        out.push_back(alg.basis(BasisVector::y(i)));
    for (std::size_t r = 0; r < admissible.dim(); ++r)
        out.push_back(admissible.basis_vector(r));
    return out;
}

Subspace admissible_extensions(const Algebra& alg, const Subspace& ideal)
{
    return subspace_intersect(perp(ideal, alg.form()), preimage_into(alg, ideal));
}

bool chain_is_acceptable(const Algebra& alg, const std::vector<Subspace>& chain)
{
    return alg.n() < 3 || is_central_chain(alg, doubled_chain(alg, chain));
}

}  // namespace

IsotropicChain isotropic_ideal_chain(const Algebra& alg)
{
    const auto n = static_cast<std::size_t>(alg.n());
    IsotropicChain result;
    result.terms.push_back(Subspace::zero(alg.field(), alg.dim()));
    for (std::size_t r = 1; r <= n; ++r) {
        const auto& current = result.terms.back();
        auto admissible = admissible_extensions(alg, current);
        bool extended = false;
        for (const auto& v : chain_candidates(alg, admissible)) {
            if (admissible.contains(v) && !current.contains(v)) {
                result.terms.push_back(subspace_sum(current, Subspace::span(alg.field(), alg.dim(), {v})));
                extended = true;
                break;
            }
        }
        if (!extended)
            throw NotNilpotentError("no isotropic ideal of dimension " + std::to_string(r) +
                                    " extends the chain; the algebra is not nilpotent");
    }
    if (chain_is_acceptable(alg, result.terms))
        return result;

    // Backtracking over the same candidate order, bounded.
    std::size_t budget = 200000;
    std::vector<Subspace> path{Subspace::zero(alg.field(), alg.dim())};
    std::function<bool()> search = [&]() -> bool {
        if (path.size() == n + 1)
            return chain_is_acceptable(alg, path);
        if (budget == 0)
            return false;
        --budget;
        auto current = path.back();
        auto admissible = admissible_extensions(alg, current);
        std::vector<Subspace> tried;
        for (const auto& v : chain_candidates(alg, admissible)) {
            if (!admissible.contains(v) || current.contains(v))
                continue;
            auto next = subspace_sum(current, Subspace::span(alg.field(), alg.dim(), {v}));
            if (std::find(tried.begin(), tried.end(), next) != tried.end())
                continue;
            tried.push_back(next);
            path.push_back(std::move(next));
            if (search())
                return true;
            path.pop_back();
        }
        return false;
    };
    if (!search())
        throw std::runtime_error("no central doubled isotropic chain found within the search budget");
    result.terms = path;
    result.greedy = false;
    return result;
}

bool is_maximal_class_criterion(const Algebra& alg)
{
    const int n = alg.n();
    if (alg.dim() < 8)
        throw std::invalid_argument("maximal class criterion needs dimension at least 8");
    if (!validate_nilpotent_presentation(alg.presentation()))
        throw std::invalid_argument("maximal class criterion needs an algebra given by a nilpotent presentation");
    auto prod = [&](BasisVector a, BasisVector b) { return Vector(alg.field(), alg.product(a.coordinate(), b.coordinate())); };
    for (int i = 2; i <= n - 2; ++i)
        if (prod(BasisVector::x(i), BasisVector::y(i + 1)).is_zero())
            return false;
    auto s = Subspace::span(alg.field(), alg.dim(),
                            {prod(BasisVector::x(1), BasisVector::y(2)), prod(BasisVector::y(1), BasisVector::y(2))});
    return s.dim() == 2;
}

bool maximal_class_structure_check(const Algebra& alg)
{
    const int n = alg.n();
    if (alg.dim() < 8)
        throw NotMaximalClassError("maximal class structure needs dimension at least 8");
    auto series = central_series(alg);
    if (!series.nilpotency_class || *series.nilpotency_class != 2 * n - 3)
        throw NotMaximalClassError("algebra is not of maximal class " + std::to_string(2 * n - 3));
    const auto zero = Subspace::zero(alg.field(), alg.dim());
    for (int k = 0; k <= 2 * n - 3; ++k) {
        const auto& lk = series.lower_term(k);
        const auto& z_prev = k == 0 ? zero : series.upper_term(k - 1);
        if (!(lk == perp(z_prev, alg.form())) || !(lk == series.upper_term(2 * n - k - 2)))
            return false;
    }
    return true;
}

}  // namespace saa
