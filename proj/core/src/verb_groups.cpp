#include "commitverb/verb_groups.hpp"

#include "commitverb/errors.hpp"

namespace commitverb {

VerbGroupTable::VerbGroupTable(Map groups) : groups_(std::move(groups)) {
    for (const auto& [lemma, group] : groups_)
        if (!is_valid_group(group))
            throw UsageError("verb group id for '" + lemma + "' out of range: " + std::to_string(group));
}

std::optional<GroupId> VerbGroupTable::lookup(std::string_view lemma) const {
    if (auto it = groups_.find(lemma); it != groups_.end()) return it->second;
    return std::nullopt;
}

std::vector<std::string> VerbGroupTable::lemmas_in(GroupId group) const {
    std::vector<std::string> out;
    for (const auto& [lemma, g] : groups_)
        if (g == group) out.push_back(lemma);
    return out;
}

const VerbGroupTable& builtin_table() {
    static const VerbGroupTable table(VerbGroupTable::Map{
        {"add", 1},     {"create", 1},  {"make", 1},     {"implement", 1},
        {"fix", 2},
        {"remove", 3},
        {"update", 4},  {"upgrade", 4},
        {"use", 5},
        {"move", 6},    {"change", 6},
        {"prepare", 7},
        {"improve", 8},
        {"ignore", 9},
        {"handle", 10},
        {"rename", 11},
        {"allow", 12},
        {"set", 13},
        {"revert", 14},
        {"replace", 15},
    });
    return table;
}

std::optional<LabeledDiff> label_commit(const Commit& commit, const VerbGroupTable& table,
                                        const VerbLexicon& lexicon) {
    auto split = split_sentences(commit.message);
    if (split.empty()) return std::nullopt;
    auto phrase = extract_leading_verb_object(split.sentences.front(), lexicon);
    if (!phrase) return std::nullopt;
    auto group = table.lookup(phrase->verb_lemma);
    if (!group) return std::nullopt;
    return LabeledDiff{commit.id, commit.message, commit.diff, *group};
}

LabelResult label_corpus(const std::vector<Commit>& commits, const VerbGroupTable& table,
                         const VerbLexicon& lexicon) {
    LabelResult result;
    for (const auto& commit : commits) {
        if (auto labeled = label_commit(commit, table, lexicon)) {
            ++result.group_counts[labeled->label];
            result.labeled.push_back(std::move(*labeled));
        }
    }
    return result;
}

}  // namespace commitverb
