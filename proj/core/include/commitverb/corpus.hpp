#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace commitverb {

/// One version-control submission. Message and diff are kept verbatim.
struct Commit {
    std::string id;
    std::string message;
    std::string diff;

    friend bool operator==(const Commit&, const Commit&) = default;
};

inline constexpr std::size_t kDefaultMaxDiffBytes = std::size_t{1} << 20;

struct FilterPolicy {
    std::size_t max_diff_bytes = kDefaultMaxDiffBytes;
    bool ascii_only_diff = true;
    bool english_only_message = true;
    bool drop_merge_rollback = true;
};

/// Throws UsageError when the policy is unusable (max_diff_bytes == 0).
void validate(const FilterPolicy& policy);

/// First whitespace-delimited token, lowercased, is "merge" or "rollback".
bool is_merge_or_rollback(std::string_view message);

/// Non-blank, and every byte is printable ASCII or one of tab/LF/CR/space.
bool is_valid_message(std::string_view message);

bool is_valid_diff(std::string_view diff, const FilterPolicy& policy);

/// Rejections per rule. A commit is charged to the first rule it fails,
/// in the order message -> merge/rollback -> diff.
struct FilterTally {
    std::size_t invalid_message = 0;
    std::size_t merge_or_rollback = 0;
    std::size_t invalid_diff = 0;

    std::size_t total() const { return invalid_message + merge_or_rollback + invalid_diff; }

    friend bool operator==(const FilterTally&, const FilterTally&) = default;
};

enum class FilterVerdict { kept, invalid_message, merge_or_rollback, invalid_diff };

FilterVerdict classify(const Commit& commit, const FilterPolicy& policy);

struct FilterResult {
    std::vector<Commit> kept;
    FilterTally tally;
};

FilterResult filter_corpus(const std::vector<Commit>& commits, const FilterPolicy& policy = {});

}  // namespace commitverb
