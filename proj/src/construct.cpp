#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "saa/constructions.hpp"
#include "saa/series.hpp"

namespace saa {

std::uint64_t omega(int m)
{
    if (m < 0)
        throw std::invalid_argument("omega is defined for m >= 0");
    if (m == 0)
        return 0;
    std::uint64_t v = 2;
    for (int i = 1; i < m; ++i) {
        std::uint64_t a = v % 2 == 0 ? v / 2 : v;
        std::uint64_t b = v % 2 == 0 ? v - 1 : (v - 1) / 2;
        if (b != 0 && a > (std::numeric_limits<std::uint64_t>::max() - 2) / b)
            throw std::overflow_error("omega(" + std::to_string(m) + ") exceeds 64 bits");
        v = 2 + a * b;
    }
    return v;
}

OmegaTable OmegaTable::up_to(int m_max)
{
    OmegaTable t;
    for (int m = 0; m <= m_max; ++m)
        t.values.push_back(omega(m));
    return t;
}

std::string to_string(MinimalCase c)
{
    return c == MinimalCase::One ? "ONE" : "TWO";
}

ClassPrediction predict_min_class(int n)
{
    if (n < 4)
        throw std::invalid_argument("class prediction needs n >= 4 (dimension 2n >= 8), got n = " + std::to_string(n));
    const auto nn = static_cast<std::uint64_t>(n);
    int m = 0;
    while (!(omega(m) < nn && nn <= omega(m + 1)))
        ++m;
    const bool one = 2 * nn <= omega(m) + omega(m + 1);
    return {n, m, one ? MinimalCase::One : MinimalCase::Two, one ? 2 * m + 1 : 2 * m + 2};
}

namespace {

using IndexPair = std::pair<int, int>;

// Index bookkeeping for one half-dimension n and level m.
struct Shells {
    int n;
    int m;
    std::vector<int> om;  // Omega(0..m+1), all <= n except possibly the last

    Shells(int n_, int m_) : n(n_), m(m_)
    {
        for (int r = 0; r <= m; ++r)
            om.push_back(static_cast<int>(omega(r)));
    }

    // Lowest index of the top Omega(r) block {n - Omega(r) + 1, ..., n}.
    int top_start(int r) const { return n - om[r] + 1; }

    // Pairs (i, j), i < j, inside the top Omega(r) block but not inside the
    // top Omega(r-1) block, in lexicographic order.
    std::vector<IndexPair> shell_pairs(int r) const
    {
        std::vector<IndexPair> out;
        for (int i = top_start(r); i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(i >= top_start(r - 1) && j >= top_start(r - 1)))
                    out.emplace_back(i, j);
        return out;
    }

    // x indices of the shell V_{Omega(r+1)} \ V_{Omega(r)}, descending.
    std::vector<int> shell_generators(int r) const
    {
        std::vector<int> out;
        for (int i = n - om[r]; i >= n - om[r + 1] + 1; --i)
            out.push_back(i);
        return out;
    }

    // Indices new at level m: top Omega(m) minus top Omega(m-1).
    std::set<int> new_at_top() const
    {
        std::set<int> out;
        for (int i = top_start(m); i < top_start(m - 1); ++i)
            out.insert(i);
        return out;
    }

    int residual() const { return n - om[m]; }
};

GeneratorTriple make_triple(BasisVector u, IndexPair p)
{
    return {u, BasisVector::y(p.first), BasisVector::y(p.second)};
}

// First injection (in lexicographic order over the pair list, domain taken in
// order) of `domain` into `pairs` whose pairs jointly cover `must_cover`;
// `first_must_contain`, when non-empty, must be inside the first domain
// element's pair.
std::optional<std::vector<IndexPair>> first_covering_injection(std::size_t domain_size,
                                                               const std::vector<IndexPair>& pairs,
                                                               const std::set<int>& must_cover,
                                                               const std::set<int>& first_must_contain)
{
    std::vector<IndexPair> chosen;
    std::vector<bool> used(pairs.size(), false);
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        std::set<int> covered;
        for (const auto& [i, j] : chosen) {
            covered.insert(i);
            covered.insert(j);
        }
        std::size_t missing = 0;
        for (int v : must_cover)
            missing += covered.count(v) ? 0 : 1;
        if (idx == domain_size)
            return missing == 0;
        if (missing > 2 * (domain_size - idx))
            return false;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (used[k])
                continue;
            if (idx == 0 && !first_must_contain.empty()) {
                bool ok = true;
                for (int v : first_must_contain)
                    ok = ok && (pairs[k].first == v || pairs[k].second == v);
                if (!ok)
                    continue;
            }
            used[k] = true;
            chosen.push_back(pairs[k]);
            if (rec(idx + 1))
                return true;
            chosen.pop_back();
            used[k] = false;
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    return chosen;
}

TripleSet build_triple_set(const ClassPrediction& pred)
{
    const int n = pred.n;
    const int m = pred.m;
    Shells sh(n, m);
    TripleSet ts{n, m, pred.which, {}};

    // Inner shells: bijections psi_r, generators descending, pairs lexicographic.
    for (int r = 1; r <= m - 1; ++r) {
        auto gens = sh.shell_generators(r);
        auto pairs = sh.shell_pairs(r);
        if (gens.size() != pairs.size())
            throw std::logic_error("shell " + std::to_string(r) + " sizes differ");
        for (std::size_t k = 0; k < gens.size(); ++k)
            ts.triples.push_back(make_triple(BasisVector::x(gens[k]), pairs[k]));
    }

    // Outer shell: residual generators injected into the level-m pair shell.
    const int k = sh.residual();
    std::vector<BasisVector> domain;
    for (int i = 1; i <= k; ++i) {
        if (pred.which == MinimalCase::One)
            domain.push_back(BasisVector::y(i));
        domain.push_back(BasisVector::x(i));
    }
    auto fresh = sh.new_at_top();
    std::set<int> first_contains;
    if (pred.which == MinimalCase::One && sh.om[m] - sh.om[m - 1] <= 2)
        first_contains = fresh;
    auto injection = first_covering_injection(domain.size(), sh.shell_pairs(m), fresh, first_contains);
    if (!injection)
        throw std::logic_error("no admissible injection of the residual generators for n = " + std::to_string(n));
    for (std::size_t i = 0; i < domain.size(); ++i)
        ts.triples.push_back(make_triple(domain[i], (*injection)[i]));

    // Case TWO: the residual y's y_1..y_k are tied together in y-triples
    // (y_a, y_b, y_c) with consecutive a < b and c cycling through the top
    // Omega(m) indices from y_n down; an odd tail reuses its predecessor.
    if (pred.which == MinimalCase::Two) {
        if (k < 2)
            throw std::logic_error("case TWO needs at least two residual generators");
        std::vector<IndexPair> groups;
        for (int a = 1; a + 1 <= k; a += 2)
            groups.emplace_back(a, a + 1);
        if (k % 2 == 1)
            groups.emplace_back(k - 1, k);
        const int top = sh.om[m];
        for (std::size_t g = 0; g < groups.size(); ++g) {
            int c = n - static_cast<int>(g % static_cast<std::size_t>(top));
            ts.triples.push_back({BasisVector::y(groups[g].first), BasisVector::y(groups[g].second), BasisVector::y(c)});
        }
    }
    return ts;
}

}  // namespace

std::vector<std::string> triple_set_violations(const TripleSet& ts)
{
    std::vector<std::string> out;
    const int n = ts.n;
    Shells sh(n, ts.m);
    const int k = sh.residual();
    auto name = [](const GeneratorTriple& t) {
        return "(" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")";
    };

    // Shape and generator range.
    for (const auto& t : ts.triples) {
        const auto& [u, v, w] = t;
        if (!v.is_y() || !w.is_y() || !(u.index < v.index && v.index < w.index) || u.index < 1 || w.index > n)
            out.push_back("triple " + name(t) + " is not a standard nilpotent triple");
        bool u_ok = (u.is_x() && u.index <= n - 2) || (u.is_y() && u.index <= k);
        if (!u_ok)
            out.push_back("triple " + name(t) + " has a generator outside x_{n-2}..x_1, y_1..y_{n-Omega(m)}");
        if (ts.which == MinimalCase::One && (v.index < sh.top_start(ts.m) || w.index < sh.top_start(ts.m)))
            out.push_back("triple " + name(t) + " pairs y's outside the top Omega(m) block");
    }

    // Inner shell bijections.
    for (int r = 1; r <= ts.m - 1; ++r) {
        auto gens = sh.shell_generators(r);
        auto pairs = sh.shell_pairs(r);
        std::set<IndexPair> shell_pairs(pairs.begin(), pairs.end());
        for (int g : gens) {
            int hits = 0;
            for (const auto& t : ts.triples)
                if (t[0] == BasisVector::x(g) && shell_pairs.count({t[1].index, t[2].index}))
                    ++hits;
            if (hits != 1)
                out.push_back("shell " + std::to_string(r) + ": x" + std::to_string(g) + " has " +
                              std::to_string(hits) + " shell pairs");
        }
        for (const auto& p : pairs) {
            int hits = 0;
            for (const auto& t : ts.triples)
                if (t[0].is_x() && std::find(gens.begin(), gens.end(), t[0].index) != gens.end() && t[1].is_y() &&
                    t[1].index == p.first && t[2].index == p.second)
                    ++hits;
            if (hits != 1)
                out.push_back("shell " + std::to_string(r) + ": pair (y" + std::to_string(p.first) + ", y" +
                              std::to_string(p.second) + ") has " + std::to_string(hits) + " generators");
        }
    }

    // No two triples share two entries.
    for (std::size_t i = 0; i < ts.triples.size(); ++i)
        for (std::size_t j = i + 1; j < ts.triples.size(); ++j) {
            int common = 0;
            for (const auto& a : ts.triples[i])
                for (const auto& b : ts.triples[j])
                    common += a == b ? 1 : 0;
            if (common >= 2)
                out.push_back("triples " + name(ts.triples[i]) + " and " + name(ts.triples[j]) +
                              " share two entries");
        }

    // Coverage.
    std::set<BasisVector, std::less<>> seen;
    for (const auto& t : ts.triples)
        seen.insert(t.begin(), t.end());
    for (int i = 1; i <= n - 2; ++i)
        if (!seen.count(BasisVector::x(i)))
            out.push_back("x" + std::to_string(i) + " is in no triple");
    for (int i = 1; i <= n; ++i)
        if (!seen.count(BasisVector::y(i)))
            out.push_back("y" + std::to_string(i) + " is in no triple");
    return out;
}

MinimalConstruction construct_minimal(int n, PrimeField field)
{
    auto pred = predict_min_class(n);
    auto ts = build_triple_set(pred);

    std::vector<Triple> triples;
    for (const auto& [u, v, w] : ts.triples)
        triples.push_back({u, v, w, FieldElement(field, 1)});
    Presentation pres = Presentation(n, field, std::move(triples)).canonical();

    auto fail = [&](const std::string& why) {
        throw std::logic_error("construction for n = " + std::to_string(n) + " over GF(" +
                               std::to_string(field.p()) + ") failed self-verification: " + why);
    };
    if (!validate_nilpotent_presentation(pres))
        fail("presentation is not nilpotent-shaped");
    if (auto v = triple_set_violations(ts); !v.empty())
        fail(v.front());

    auto alg = Algebra::build(pres);
    auto series = central_series(alg);
    if (!series.nilpotency_class)
        fail("algebra is not nilpotent");
    if (*series.rank != 2 || series.upper[1].dim() != 2)
        fail("rank is " + std::to_string(*series.rank) + ", centre dimension " + std::to_string(series.upper[1].dim()));
    if (*series.nilpotency_class != pred.predicted_class)
        fail("class " + std::to_string(*series.nilpotency_class) + " differs from predicted " +
             std::to_string(pred.predicted_class));

    return {pred, std::move(ts), std::move(pres), *series.nilpotency_class, *series.rank};
}

}  // namespace saa
