#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace commitverb {

struct ProcessResult {
    /// Exit status of the child; -1 when it could not be started.
    int exit_code = -1;
    std::string out;

    bool ok() const { return exit_code == 0; }
};

/// Runs argv[0] (looked up on PATH) without a shell, capturing stdout.
/// The child's stderr is discarded.
ProcessResult run_process(const std::vector<std::string>& argv);

using CommandRunner = std::function<ProcessResult(const std::vector<std::string>&)>;

struct IngestResult {
    std::size_t written = 0;
    /// Commits skipped because their diff could not be produced.
    std::size_t skipped = 0;
};

/// Writes one corpus record per non-merge commit on the first-parent chain
/// of HEAD, oldest first. Root commits diff against the empty tree.
/// Throws EnvironmentError when git cannot be run and IngestError when
/// repo_path is not a readable repository.
IngestResult ingest_repo(const std::filesystem::path& repo_path, const std::filesystem::path& output_path,
                         const CommandRunner& runner = run_process);

}  // namespace commitverb
