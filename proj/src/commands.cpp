#include "saa/commands.hpp"

#include <sstream>

#include "saa/constructions.hpp"
#include "saa/io.hpp"
#include "saa/series.hpp"

namespace saa {

namespace {

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

const char* pass_fail(bool b)
{
    return b ? "pass" : "fail";
}

CommandResult usage_error(const std::string& message)
{
    return {exit_usage, "", "error: " + message + "\n"};
}

}  // namespace

CommandResult verify_presentation(const Presentation& pres, const Expectations& expect)
{
    auto alg = Algebra::build(pres);
    auto series = central_series(alg);
    const bool nilpotent = series.nilpotency_class.has_value();
    const bool nilpotent_shape = validate_nilpotent_presentation(pres.canonical());
    const int n = pres.n();
    bool ok = true;
    std::vector<std::string> failures;

    std::ostringstream os;
    os << "n: " << n << "\n";
    os << "p: " << pres.field().p() << "\n";
    os << "dim: " << alg.dim() << "\n";
    os << "kind: " << (nilpotent_shape ? "nilpotent" : "general") << "\n";
    os << "triples: " << pres.canonical().triples().size() << "\n";
    os << "lower_dims: " << join(series.lower_dims()) << "\n";
    os << "upper_dims: " << join(series.upper_dims()) << "\n";
    os << "class: " << (nilpotent ? std::to_string(*series.nilpotency_class) : "none") << "\n";
    os << "rank: " << (nilpotent ? std::to_string(*series.rank) : "none") << "\n";
    os << "predicted_class: " << (n >= 4 ? std::to_string(predict_min_class(n).predicted_class) : "n/a") << "\n";
    const auto& center = series.upper_term(1);
    os << "center_dim: " << center.dim() << "\n";
    os << "center_isotropic: " << yes_no(is_isotropic(alg, center)) << "\n";

    os << "maximal_class_criterion: ";
    if (alg.dim() >= 8 && nilpotent_shape)
        os << yes_no(is_maximal_class_criterion(alg)) << "\n";
    else
        os << "n/a\n";

    os << "maximal_class_structure: ";
    if (alg.dim() >= 8 && nilpotent && *series.nilpotency_class == 2 * n - 3) {
        bool s = maximal_class_structure_check(alg);
        ok = ok && s;
        if (!s)
            failures.push_back("maximal_class_structure: L^k = perp(Z_{k-1}) = Z_{2n-k-2} fails");
        os << pass_fail(s) << "\n";
    } else {
        os << "n/a\n";
    }

    auto record = [&](const char* key, const std::optional<CheckResult>& r) {
        os << key << ": " << (r ? pass_fail(r->passed) : "n/a") << "\n";
        if (r && !r->passed) {
            ok = false;
            failures.push_back(std::string(key) + ": " + r->details);
        }
    };
    record("axioms", check_axioms(alg));
    record("duality", nilpotent ? std::optional(check_duality(alg)) : std::nullopt);
    record("series_growth_bound", nilpotent ? std::optional(check_series_growth_bound(alg)) : std::nullopt);
    const bool rank_two = nilpotent && center.dim() == 2 && alg.dim() >= 8;
    record("rank_two_facts", rank_two ? std::optional(check_rank_two_facts(alg)) : std::nullopt);

    std::vector<std::string> expectations;
    if (expect.nilpotency_class) {
        bool met = nilpotent && *series.nilpotency_class == *expect.nilpotency_class;
        expectations.push_back("class=" + std::to_string(*expect.nilpotency_class) + (met ? " met" : " unmet"));
        if (!met) {
            ok = false;
            failures.push_back("expected class " + std::to_string(*expect.nilpotency_class));
        }
    }
    if (expect.rank) {
        bool met = nilpotent && *series.rank == *expect.rank;
        expectations.push_back("rank=" + std::to_string(*expect.rank) + (met ? " met" : " unmet"));
        if (!met) {
            ok = false;
            failures.push_back("expected rank " + std::to_string(*expect.rank));
        }
    }
    os << "expectations: ";
    if (expectations.empty())
        os << "none";
    for (std::size_t i = 0; i < expectations.size(); ++i)
        os << (i ? ", " : "") << expectations[i];
    os << "\n";
    os << "result: " << pass_fail(ok) << "\n";
    for (const auto& f : failures)
        os << "failure: " << f << "\n";
    return {ok ? exit_ok : exit_check_failed, os.str(), ""};
}

CommandResult cmd_verify(const std::filesystem::path& path, const Expectations& expect)
{
    Presentation pres(1, PrimeField(2));
    try {
        pres = parse_presentation(read_text_file(path));
    } catch (const ParseError& e) {
        return usage_error(path.filename().string() + ": " + e.what());
    } catch (const IoError& e) {
        return usage_error(e.what());
    }
    return verify_presentation(pres, expect);
}

CommandResult cmd_predict(int n)
{
    if (n < 4)
        return usage_error("n must be at least 4 (got " + std::to_string(n) + ")");
    auto pr = predict_min_class(n);
    return {exit_ok,
            "m=" + std::to_string(pr.m) + " case=" + to_string(pr.which) + " class=" +
                std::to_string(pr.predicted_class) + "\n",
            ""};
}

CommandResult cmd_construct(int n, std::uint64_t p, const std::filesystem::path& out)
{
    if (n < 4)
        return usage_error("n must be at least 4 (got " + std::to_string(n) + ")");
    std::optional<PrimeField> field;
    try {
        field.emplace(p);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    auto c = construct_minimal(n, *field);
    try {
        write_text_file(out, emit_presentation(c.presentation));
    } catch (const IoError& e) {
        return usage_error(e.what());
    }
    std::ostringstream os;
    os << "n: " << n << "\n";
    os << "p: " << p << "\n";
    os << "case: " << to_string(c.prediction.which) << "\n";
    os << "triples: " << c.presentation.triples().size() << "\n";
    os << "rank: " << c.verified_rank << "\n";
    os << "class: " << c.verified_class << "\n";
    return {exit_ok, os.str(), ""};
}

CommandResult cmd_catalog(const std::optional<std::string>& name, std::optional<std::int64_t> r, std::uint64_t p,
                          const std::optional<std::filesystem::path>& out)
{
    std::optional<PrimeField> field;
    try {
        field.emplace(p);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (!name) {
        if (r || out)
            return usage_error("--r and --out need a catalog entry name");
        std::ostringstream os;
        for (const auto& entry : catalog(*field))
            os << entry.name << " n=" << entry.presentation.n() << " class=" << entry.expected_class
               << " rank=" << entry.expected_rank
               << (catalog_is_parameterized(entry.name) ? " parameter=r" : "") << "\n";
        return {exit_ok, os.str(), ""};
    }
    std::optional<CatalogEntry> entry;
    try {
        entry.emplace(catalog_entry(*name, *field, r));
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    auto text = emit_presentation(entry->presentation);
    if (!out)
        return {exit_ok, text, ""};
    try {
        write_text_file(*out, text);
    } catch (const IoError& e) {
        return usage_error(e.what());
    }
    return {exit_ok, "wrote " + entry->name + "\n", ""};
}

CommandResult cmd_scan(const ScanConfig& cfg, unsigned workers)
{
    if (cfg.samples == 0)
        return usage_error("--samples must be at least 1");
    if (cfg.n < 1)
        return usage_error("--n must be at least 1");
    if (cfg.p < 2 || cfg.p > PrimeField::max_modulus || !is_prime(cfg.p))
        return usage_error("--p must be a prime below 2^31");
    return {exit_ok, scan(cfg, workers).render(), ""};
}

}  // namespace saa
