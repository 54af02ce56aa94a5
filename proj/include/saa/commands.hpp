#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "saa/presentation.hpp"
#include "saa/verify.hpp"

namespace saa {

/// Exit-code contract of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

struct Expectations {
    std::optional<int> nilpotency_class;
    std::optional<int> rank;
};

/// Key/value report in a fixed line order. exit_ok iff every applicable
/// check and every expectation passes.
CommandResult verify_presentation(const Presentation& p, const Expectations& expect = {});

/// Reads and parses the file, then verify_presentation. I/O and parse
/// errors give exit_usage.
CommandResult cmd_verify(const std::filesystem::path& path, const Expectations& expect = {});

/// "m=<m> case=<ONE|TWO> class=<k>".
CommandResult cmd_predict(int n);

CommandResult cmd_construct(int n, std::uint64_t p, const std::filesystem::path& out);

/// Without a name, lists the entries. With a name, emits the presentation
/// to `out` or to stdout.
CommandResult cmd_catalog(const std::optional<std::string>& name, std::optional<std::int64_t> r, std::uint64_t p,
                          const std::optional<std::filesystem::path>& out);

CommandResult cmd_scan(const ScanConfig& cfg, unsigned workers = 1);

}  // namespace saa
