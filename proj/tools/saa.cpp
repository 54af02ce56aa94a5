// Command-line front end: verify, predict, construct, catalog, scan.

#include <iostream>

#include "CLI11.hpp"
#include "saa/commands.hpp"

namespace {

int emit(const saa::CommandResult& r)
{
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symplectic alternating algebras over GF(p)"};
    app.require_subcommand(1);

    std::string verify_file;
    std::optional<int> expect_class, expect_rank;
    auto* verify = app.add_subcommand("verify", "analyse a presentation file and run every applicable check");
    verify->add_option("file", verify_file, "presentation file")->required();
    verify->add_option("--expect-class", expect_class, "fail unless the nilpotency class is K");
    verify->add_option("--expect-rank", expect_rank, "fail unless the rank is R");

    int predict_n = 0;
    auto* predict = app.add_subcommand("predict", "predicted least class of a rank-2 algebra of dimension 2n");
    predict->add_option("--n", predict_n, "half-dimension")->required();

    int construct_n = 0;
    std::uint64_t construct_p = 3;
    std::string construct_out;
    auto* construct = app.add_subcommand("construct", "build and verify the minimal-class construction");
    construct->add_option("--n", construct_n, "half-dimension")->required();
    construct->add_option("--p", construct_p, "prime modulus")->required();
    construct->add_option("--out", construct_out, "output presentation file")->required();

    std::optional<std::string> catalog_name;
    std::optional<std::int64_t> catalog_r;
    std::uint64_t catalog_p = 3;
    std::optional<std::string> catalog_out;
    auto* catalog = app.add_subcommand("catalog", "list catalog entries or emit one");
    catalog->add_option("name", catalog_name, "entry name");
    catalog->add_option("--r", catalog_r, "parameter value for parameterized entries");
    catalog->add_option("--p", catalog_p, "prime modulus (default 3)");
    catalog->add_option("--out", catalog_out, "output presentation file");

    saa::ScanConfig scan_cfg;
    unsigned scan_workers = 1;
    auto* scan = app.add_subcommand("scan", "classify random nilpotent presentations");
    scan->add_option("--n", scan_cfg.n, "half-dimension")->required();
    scan->add_option("--p", scan_cfg.p, "prime modulus")->required();
    scan->add_option("--samples", scan_cfg.samples, "number of draws")->required();
    scan->add_option("--seed", scan_cfg.seed, "64-bit seed")->required();
    scan->add_option("--rank", scan_cfg.rank_filter, "classify only samples of this rank");
    scan->add_option("--workers", scan_workers, "worker threads (does not change the report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return saa::exit_usage;
    }

    try {
        if (*verify)
            return emit(saa::cmd_verify(verify_file, {expect_class, expect_rank}));
        if (*predict)
            return emit(saa::cmd_predict(predict_n));
        if (*construct)
            return emit(saa::cmd_construct(construct_n, construct_p, construct_out));
        if (*catalog) {
            std::optional<std::filesystem::path> out;
            if (catalog_out)
                out = *catalog_out;
            return emit(saa::cmd_catalog(catalog_name, catalog_r, catalog_p, out));
        }
        if (*scan)
            return emit(saa::cmd_scan(scan_cfg, scan_workers));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return saa::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return saa::exit_check_failed;
    }
    return saa::exit_usage;
}
