#pragma once

#include "commitverb/corpus.hpp"
#include "commitverb/features.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

namespace commitverb::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2 };

/// Everything a run depends on. Paths left empty are unused by the subcommand.
struct RunConfig {
    std::string subcommand;

    std::filesystem::path repo;
    std::filesystem::path in;
    std::filesystem::path out;
    std::filesystem::path report;
    std::filesystem::path model;
    std::filesystem::path test;
    std::filesystem::path lexicon;
    std::filesystem::path train_out;
    std::filesystem::path test_out;

    FilterPolicy policy;
    std::size_t min_df = kDefaultMinDf;
    double alpha = 1.0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t test_count = 0;
    bool oversample = false;
    bool stratified = false;
};

/// Either a config to run or the exit code to return right away
/// (help, --version, or a usage error already reported on err).
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes config.subcommand. Data goes to files or out; diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commitverb::cli
