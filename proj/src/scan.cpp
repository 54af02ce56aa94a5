#include <algorithm>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "saa/constructions.hpp"
#include "saa/io.hpp"
#include "saa/verify.hpp"

namespace saa {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("bound must be positive");
    // Reject the lowest 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        auto r = next();
        if (r >= threshold)
            return r % bound;
    }
}

SplitMix64 SplitMix64::for_sample(std::uint64_t seed, std::uint64_t index)
{
    SplitMix64 base(seed);
    auto a = base.next();
    SplitMix64 idx(index);
    return SplitMix64(a ^ idx.next());
}

Presentation random_nilpotent_presentation(int n, PrimeField field, SplitMix64& rng)
{
    std::vector<Triple> triples;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (auto first : {BasisVector::x(i), BasisVector::y(i)}) {
                    auto v = rng.below(field.p());
                    if (v != 0)
                        triples.push_back(
                            {first, BasisVector::y(j), BasisVector::y(k), FieldElement(field, static_cast<std::int64_t>(v))});
                }
    return Presentation(n, field, std::move(triples));
}

std::uint64_t ScanReport::rank2_at_most(int k) const
{
    std::uint64_t total = 0;
    for (const auto& [key, count] : by_rank_and_class)
        if (key.first == 2 && key.second <= k)
            total += count;
    return total;
}

namespace {

void sample(const ScanConfig& cfg, const PrimeField& field, std::uint64_t index, ScanReport& out)
{
    auto rng = SplitMix64::for_sample(cfg.seed, index);
    auto pres = random_nilpotent_presentation(cfg.n, field, rng);
    auto alg = Algebra::build(pres);
    auto series = central_series(alg);
    const int rk = *series.rank;
    const int cls = *series.nilpotency_class;
    ++out.drawn;
    if (cfg.rank_filter && rk != *cfg.rank_filter)
        return;
    ++out.classified;
    ++out.by_rank_and_class[{rk, cls}];

    auto discover = [&](std::string kind, std::string detail) {
        out.discoveries.push_back({index, std::move(kind), std::move(detail), emit_presentation(pres)});
    };
    auto run = [&](const CheckResult& r) {
        if (!r.passed) {
            ++out.check_failures;
            discover("check-failed:" + r.check_name, r.details);
        }
    };
    run(check_duality(alg));
    run(check_series_growth_bound(alg));

    if (rk != 2)
        return;
    ++out.rank2;
    out.rank2_min_class = std::min(out.rank2_min_class.value_or(cls), cls);
    if (cfg.n < 4)
        return;
    const int top = 2 * cfg.n - 3;
    if (cls < *out.predicted_min_class) {
        ++out.rank2_below_prediction;
        discover("below-prediction",
                 "class " + std::to_string(cls) + " < predicted " + std::to_string(*out.predicted_min_class));
    }
    if (cls < 5 || cls > top) {
        ++out.rank2_outside_bounds;
        discover("outside-bounds", "class " + std::to_string(cls) + " outside [5, " + std::to_string(top) + "]");
    }
    run(check_rank_two_facts(alg));
    bool criterion = is_maximal_class_criterion(alg);
    if (criterion != (cls == top)) {
        ++out.criterion_mismatches;
        discover("criterion-mismatch", std::string("criterion ") + (criterion ? "true" : "false") + " at class " +
                                           std::to_string(cls));
    }
}

void merge(ScanReport& into, const ScanReport& part)
{
    into.drawn += part.drawn;
    into.classified += part.classified;
    for (const auto& [key, count] : part.by_rank_and_class)
        into.by_rank_and_class[key] += count;
    into.rank2 += part.rank2;
    if (part.rank2_min_class)
        into.rank2_min_class = std::min(into.rank2_min_class.value_or(*part.rank2_min_class), *part.rank2_min_class);
    into.rank2_below_prediction += part.rank2_below_prediction;
    into.rank2_outside_bounds += part.rank2_outside_bounds;
    into.criterion_mismatches += part.criterion_mismatches;
    into.check_failures += part.check_failures;
    into.discoveries.insert(into.discoveries.end(), part.discoveries.begin(), part.discoveries.end());
}

}  // namespace

ScanReport scan(const ScanConfig& cfg, unsigned workers)
{
    if (cfg.samples == 0)
        throw std::invalid_argument("scan needs at least one sample");
    if (cfg.n < 1)
        throw std::invalid_argument("scan needs n >= 1");
    PrimeField field(cfg.p);
    workers = std::max(1u, workers);
    if (workers > cfg.samples)
        workers = static_cast<unsigned>(cfg.samples);

    ScanReport blank;
    blank.config = cfg;
    if (cfg.n >= 4)
        blank.predicted_min_class = predict_min_class(cfg.n).predicted_class;

    std::vector<ScanReport> parts(workers, blank);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t i = w; i < cfg.samples; i += workers)
                sample(cfg, field, i, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    ScanReport report = blank;
    for (const auto& part : parts)
        merge(report, part);
    std::stable_sort(report.discoveries.begin(), report.discoveries.end(),
                     [](const ScanDiscovery& a, const ScanDiscovery& b) { return a.index < b.index; });
    return report;
}

std::string ScanReport::render() const
{
    std::ostringstream os;
    os << "n: " << config.n << "\n";
    os << "p: " << config.p << "\n";
    os << "samples: " << config.samples << "\n";
    os << "seed: " << config.seed << "\n";
    os << "rank_filter: " << (config.rank_filter ? std::to_string(*config.rank_filter) : "none") << "\n";
    os << "drawn: " << drawn << "\n";
    os << "classified: " << classified << "\n";
    for (const auto& [key, count] : by_rank_and_class)
        os << "count rank=" << key.first << " class=" << key.second << ": " << count << "\n";
    os << "rank2_samples: " << rank2 << "\n";
    os << "rank2_min_class: " << (rank2_min_class ? std::to_string(*rank2_min_class) : "none") << "\n";
    os << "predicted_min_class: " << (predicted_min_class ? std::to_string(*predicted_min_class) : "n/a") << "\n";
    os << "rank2_below_prediction: " << rank2_below_prediction << "\n";
    os << "rank2_outside_bounds: " << rank2_outside_bounds << "\n";
    os << "criterion_mismatches: " << criterion_mismatches << "\n";
    os << "check_failures: " << check_failures << "\n";
    os << "discoveries: " << discoveries.size() << "\n";
    for (const auto& d : discoveries) {
        os << "discovery index=" << d.index << " kind=" << d.kind << " detail=" << d.detail << "\n";
        std::istringstream lines(d.presentation);
        for (std::string line; std::getline(lines, line);)
            os << "  " << line << "\n";
    }
    os << "conclusion: ";
    if (rank2 == 0)
        os << "no rank-2 samples\n";
    else if (discoveries.empty())
        os << "no counterexample found in " << rank2 << " rank-2 samples\n";
    else
        os << discoveries.size() << " discoveries need inspection\n";
    return os.str();
}

}  // namespace saa
