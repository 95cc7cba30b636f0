#include "commitverb/corpus.hpp"

#include "commitverb/errors.hpp"

#include <algorithm>

namespace commitverb {

namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_printable_ascii(unsigned char c) { return c >= 0x20 && c <= 0x7e; }

bool has_content(std::string_view text) {
    return std::any_of(text.begin(), text.end(),
                       [](char c) { return !is_space(static_cast<unsigned char>(c)); });
}

bool message_passes(std::string_view message, const FilterPolicy& policy) {
    return policy.english_only_message ? is_valid_message(message) : has_content(message);
}

}  // namespace

void validate(const FilterPolicy& policy) {
    if (policy.max_diff_bytes == 0) throw UsageError("max_diff_bytes must be positive");
}

bool is_merge_or_rollback(std::string_view message) {
    std::size_t begin = 0;
    while (begin < message.size() && is_space(static_cast<unsigned char>(message[begin]))) ++begin;
    std::size_t end = begin;
    while (end < message.size() && !is_space(static_cast<unsigned char>(message[end]))) ++end;

    std::string token(message.substr(begin, end - begin));
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : char(c); });
    return token == "merge" || token == "rollback";
}

bool is_valid_message(std::string_view message) {
    if (!has_content(message)) return false;
    return std::all_of(message.begin(), message.end(), [](char ch) {
        auto c = static_cast<unsigned char>(ch);
        return is_printable_ascii(c) || is_space(c);
    });
}

bool is_valid_diff(std::string_view diff, const FilterPolicy& policy) {
    if (diff.size() > policy.max_diff_bytes) return false;
    if (!policy.ascii_only_diff) return true;
    return std::all_of(diff.begin(), diff.end(),
                       [](char c) { return static_cast<unsigned char>(c) < 128; });
}

FilterVerdict classify(const Commit& commit, const FilterPolicy& policy) {
    if (!message_passes(commit.message, policy)) return FilterVerdict::invalid_message;
    if (policy.drop_merge_rollback && is_merge_or_rollback(commit.message))
        return FilterVerdict::merge_or_rollback;
    if (!is_valid_diff(commit.diff, policy)) return FilterVerdict::invalid_diff;
    return FilterVerdict::kept;
}

FilterResult filter_corpus(const std::vector<Commit>& commits, const FilterPolicy& policy) {
    validate(policy);
    FilterResult result;
    for (const auto& commit : commits) {
        switch (classify(commit, policy)) {
            case FilterVerdict::kept: result.kept.push_back(commit); break;
            case FilterVerdict::invalid_message: ++result.tally.invalid_message; break;
            case FilterVerdict::merge_or_rollback: ++result.tally.merge_or_rollback; break;
            case FilterVerdict::invalid_diff: ++result.tally.invalid_diff; break;
        }
    }
    return result;
}

}  // namespace commitverb
