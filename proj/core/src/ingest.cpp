#include "commitverb/ingest.hpp"

#include "commitverb/corpus_io.hpp"
#include "commitverb/errors.hpp"

#include <fstream>
#include <sstream>

namespace commitverb {

namespace {

std::vector<std::string> git(const std::filesystem::path& repo, std::initializer_list<std::string> args) {
    std::vector<std::string> argv{"git", "-C", repo.string()};
    argv.insert(argv.end(), args);
    return argv;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// The message of a raw commit object is everything after the header block.
std::string message_of(const std::string& raw_commit) {
    auto sep = raw_commit.find("\n\n");
    return sep == std::string::npos ? std::string{} : raw_commit.substr(sep + 2);
}

}  // namespace

IngestResult ingest_repo(const std::filesystem::path& repo_path, const std::filesystem::path& output_path,
                         const CommandRunner& runner) {
    if (!runner({"git", "--version"}).ok()) throw EnvironmentError("git executable not found or not runnable");

    std::error_code ec;
    if (!std::filesystem::is_directory(repo_path, ec))
        throw IngestError("repository path is not a readable directory: " + repo_path.string());
    if (!runner(git(repo_path, {"rev-parse", "--git-dir"})).ok())
        throw IngestError("not a readable git repository: " + repo_path.string());

    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + output_path.string() + " for writing");

    IngestResult result;
    // An unborn HEAD means an empty repository.
    if (!runner(git(repo_path, {"rev-parse", "--verify", "-q", "HEAD^{commit}"})).ok()) return result;

    auto listing = runner(git(repo_path, {"rev-list", "--first-parent", "--no-merges", "--reverse", "HEAD"}));
    if (!listing.ok()) throw IngestError("cannot list commits of " + repo_path.string());

    for (const auto& sha : lines_of(listing.out)) {
        auto raw = runner(git(repo_path, {"cat-file", "commit", sha}));
        auto diff = runner(git(repo_path, {"diff-tree", "-r", "-p", "--root", "--no-commit-id", "--no-color",
                                           "--no-ext-diff", "--no-textconv", sha}));
        if (!raw.ok() || !diff.ok()) {
            ++result.skipped;
            continue;
        }
        out << corpus_record(Commit{sha, message_of(raw.out), std::move(diff.out)}) << '\n';
        ++result.written;
    }
    out.flush();
    if (!out) throw IoError("write failure on " + output_path.string());
    return result;
}

}  // namespace commitverb
