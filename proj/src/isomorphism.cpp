#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "saa/constructions.hpp"
#include "saa/series.hpp"

namespace saa {

BasisChange BasisChange::identity(PrimeField field, int n)
{
    BasisChange phi;
    for (int i = 1; i <= n; ++i) {
        phi.permutation.push_back(i);
        phi.scales.emplace_back(field, 1);
    }
    return phi;
}

namespace {

StructureTensor tensor_of(const Presentation& p)
{
    StructureTensor t(p.field(), p.dim());
    for (const auto& tr : p.triples())
        t.set(tr.a.coordinate(), tr.b.coordinate(), tr.c.coordinate(), tr.value.residue());
    return t;
}

// Image coordinate and scale of every coordinate under phi.
struct CoordinateMap {
    std::vector<std::size_t> image;
    std::vector<Residue> scale;
};

CoordinateMap coordinate_map(const PrimeField& f, const std::vector<int>& perm, const std::vector<Residue>& scales)
{
    const std::size_t n = perm.size();
    CoordinateMap cm{std::vector<std::size_t>(2 * n), std::vector<Residue>(2 * n)};
    for (std::size_t i = 0; i < n; ++i) {
        auto target = static_cast<std::size_t>(perm[i] - 1);
        cm.image[2 * i] = 2 * target;
        cm.image[2 * i + 1] = 2 * target + 1;
        cm.scale[2 * i] = scales[i];
        cm.scale[2 * i + 1] = f.inv(scales[i]);
    }
    return cm;
}

void require_permutation(const std::vector<int>& perm)
{
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("basis change index map is not a permutation");
}

struct Entry {
    std::size_t i, j, k;
    Residue value;
};

// gamma_b(phi u, phi v, phi w) == gamma_a(u, v, w) on a's support; together
// with equal support sizes this is equivalent to full tensor equality.
bool maps_onto(const PrimeField& f, const std::vector<Entry>& source, const StructureTensor& target,
               const CoordinateMap& cm)
{
    for (const auto& e : source) {
        Residue s = f.mul(f.mul(cm.scale[e.i], cm.scale[e.j]), cm.scale[e.k]);
        Residue got = target.value(cm.image[e.i], cm.image[e.j], cm.image[e.k]);
        if (f.mul(got, s) != e.value)
            return false;
    }
    return true;
}

}  // namespace

StructureTensor transform_tensor(const StructureTensor& t, const BasisChange& phi)
{
    const auto& f = t.field();
    if (phi.permutation.size() != phi.scales.size() || 2 * phi.permutation.size() != t.dim())
        throw std::invalid_argument("basis change does not match tensor dimension");
    require_permutation(phi.permutation);
    std::vector<Residue> scales;
    for (const auto& s : phi.scales) {
        if (!(s.field() == f) || s.is_zero())
            throw std::invalid_argument("basis change scales must be nonzero elements of the tensor's field");
        scales.push_back(s.residue());
    }
    auto cm = coordinate_map(f, phi.permutation, scales);
    StructureTensor out(f, t.dim());
    for (const auto& [key, v] : t.entries()) {
        Residue s = f.mul(f.mul(cm.scale[key[0]], cm.scale[key[1]]), cm.scale[key[2]]);
        out.set(cm.image[key[0]], cm.image[key[1]], cm.image[key[2]], f.mul(v, f.inv(s)));
    }
    return out;
}

ScalingSearch try_scaling_isomorphism(const Presentation& a, const Presentation& b, SearchBudget budget)
{
    if (a.n() != b.n() || !(a.field() == b.field()))
        throw std::invalid_argument("scaling isomorphism search needs equal dimension and field");
    const auto& f = a.field();
    const auto n = static_cast<std::size_t>(a.n());
    const auto ta = tensor_of(a);
    const auto tb = tensor_of(b);

    ScalingSearch result;
    if (ta.entries().size() != tb.entries().size()) {
        result.complete = true;
        return result;
    }
    std::vector<Entry> source;
    for (const auto& [key, v] : ta.entries())
        source.push_back({key[0], key[1], key[2], v});

    const std::uint64_t units = f.p() - 1;
    // (p-1)^n, saturated just above the budget.
    std::uint64_t diag_count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (diag_count > budget.max_candidates / units) {
            diag_count = budget.max_candidates + 1;
            break;
        }
        diag_count *= units;
    }

    auto decode = [&](std::uint64_t d, std::vector<Residue>& scales) {
        for (std::size_t i = n; i-- > 0;) {
            scales[i] = static_cast<Residue>(d % units) + 1;
            d /= units;
        }
    };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    const unsigned workers = std::max(1u, budget.workers);
    std::uint64_t base = 0;
    bool budget_hit = false;

    do {
        if (base >= budget.max_candidates) {
            budget_hit = true;
            break;
        }
        const std::uint64_t limit = std::min<std::uint64_t>(diag_count, budget.max_candidates - base);
        if (limit < diag_count)
            budget_hit = true;

        std::vector<std::optional<std::uint64_t>> hits(workers);
        auto scan_chunk = [&](unsigned w) {
            const std::uint64_t lo = limit * w / workers;
            const std::uint64_t hi = limit * (w + 1) / workers;
            std::vector<Residue> scales(n);
            for (std::uint64_t d = lo; d < hi; ++d) {
                decode(d, scales);
                if (maps_onto(f, source, tb, coordinate_map(f, perm, scales))) {
                    hits[w] = d;
                    return;
                }
            }
        };
        if (workers == 1) {
            scan_chunk(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(scan_chunk, w);
            for (auto& t : pool)
                t.join();
        }

        for (const auto& h : hits) {
            if (!h)
                continue;
            std::vector<Residue> scales(n);
            decode(*h, scales);
            BasisChange phi{perm, {}};
            for (auto s : scales)
                phi.scales.emplace_back(f, s);
            if (!(transform_tensor(ta, phi) == tb))
                throw std::logic_error("scaling witness failed full-tensor re-verification");
            result.witness = std::move(phi);
            result.examined = base + *h + 1;
            return result;
        }
        base += limit;
    } while (budget.permutations && std::next_permutation(perm.begin(), perm.end()));

    result.examined = base;
    result.complete = !budget_hit;
    return result;
}

Fingerprint fingerprint(const Algebra& alg)
{
    auto series = central_series(alg);
    Fingerprint fp;
    fp.lower_dims = series.lower_dims();
    fp.upper_dims = series.upper_dims();
    const auto& square = series.lower_term(2);
    fp.square_of_square_dim = product_space(alg, square, square).dim();
    for (const auto& term : series.lower)
        fp.lower_isotropic.push_back(is_isotropic(alg, term));
    fp.nilpotency_class = series.nilpotency_class;
    fp.rank = series.rank;
    return fp;
}

std::string Fingerprint::to_string() const
{
    std::ostringstream os;
    auto list = [&](const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
    };
    os << "lower=";
    list(lower_dims);
    os << " upper=";
    list(upper_dims);
    os << " square2=" << square_of_square_dim << " isotropic=";
    for (bool b : lower_isotropic)
        os << (b ? '1' : '0');
    os << " class=" << (nilpotency_class ? std::to_string(*nilpotency_class) : "none");
    os << " rank=" << (rank ? std::to_string(*rank) : "none");
    return os.str();
}

}  // namespace saa
