#pragma once

#include "commitverb/corpus.hpp"
#include "commitverb/text_analysis.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commitverb {

/// Verb-group id, 1..15.
using GroupId = int;

inline constexpr GroupId kMinGroup = 1;
inline constexpr GroupId kMaxGroup = 15;
inline constexpr std::size_t kGroupCount = 15;

constexpr bool is_valid_group(GroupId g) { return g >= kMinGroup && g <= kMaxGroup; }

class VerbGroupTable {
public:
    using Map = std::map<std::string, GroupId, std::less<>>;

    explicit VerbGroupTable(Map groups);

    std::optional<GroupId> lookup(std::string_view lemma) const;
    std::vector<std::string> lemmas_in(GroupId group) const;

    const Map& entries() const { return groups_; }
    std::size_t size() const { return groups_.size(); }

private:
    Map groups_;
};

/// The fixed fifteen-group taxonomy over the twenty most frequent commit verbs.
const VerbGroupTable& builtin_table();

struct LabeledDiff {
    std::string commit_id;
    std::string message;
    std::string diff;
    GroupId label = kMinGroup;

    friend bool operator==(const LabeledDiff&, const LabeledDiff&) = default;
};

/// Labels a commit by the group of the leading verb of its first sentence.
std::optional<LabeledDiff> label_commit(const Commit& commit, const VerbGroupTable& table,
                                        const VerbLexicon& lexicon);

struct LabelResult {
    std::vector<LabeledDiff> labeled;
    std::map<GroupId, std::size_t> group_counts;
};

LabelResult label_corpus(const std::vector<Commit>& commits, const VerbGroupTable& table,
                         const VerbLexicon& lexicon);

}  // namespace commitverb
