#pragma once

#include "commitverb/corpus.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace commitverb {

/// Sentences of a commit message, trimmed, in message order.
struct SentenceSplit {
    std::vector<std::string> sentences;

    std::size_t size() const { return sentences.size(); }
    bool empty() const { return sentences.empty(); }
};

/// Splits on '.', '!' or '?' runs followed by whitespace or end of text, and
/// on blank lines. A line starting with "- " or "* " is one sentence by itself.
SentenceSplit split_sentences(std::string_view message);

/// Set of lowercase verb lemmas treated as verbs. Every lexicon produced by
/// the factory functions below contains the verb-group lemmas.
class VerbLexicon {
public:
    VerbLexicon() = default;
    explicit VerbLexicon(std::set<std::string, std::less<>> lemmas);

    /// Only the twenty verb-group lemmas.
    static VerbLexicon group_lemmas();

    /// Verb-group lemmas plus the compiled-in common English verb list.
    static const VerbLexicon& bundled();

    /// One lemma per line; '#' starts a comment; blank lines ignored.
    /// The verb-group lemmas are always added.
    static VerbLexicon parse(std::string_view text);
    static VerbLexicon from_file(const std::filesystem::path& path);

    bool contains(std::string_view lemma) const { return lemmas_.find(lemma) != lemmas_.end(); }
    std::size_t size() const { return lemmas_.size(); }
    const std::set<std::string, std::less<>>& lemmas() const { return lemmas_; }

private:
    std::set<std::string, std::less<>> lemmas_;
};

/// Maps an inflected verb to its lemma. Irregular forms come from a fixed
/// exception table; regular suffixes are stripped, preferring any candidate
/// stem that the lexicon recognises (e.g. "creating" -> "create").
std::string lemmatize_verb(std::string_view token, const VerbLexicon& lexicon);
std::string lemmatize_verb(std::string_view token);

/// Irregular forms known to the lemmatizer, as (inflection, lemma).
const std::map<std::string, std::string, std::less<>>& irregular_verb_forms();

struct VerbObjectPhrase {
    std::string verb_lemma;
    std::string object_text;

    friend bool operator==(const VerbObjectPhrase&, const VerbObjectPhrase&) = default;
};

inline constexpr std::size_t kMaxObjectTokens = 6;

/// Words that end a direct-object span.
const std::set<std::string, std::less<>>& object_stop_words();

/// Leading verb plus a flat direct-object window. Absent when the first
/// token is not a recognised verb or nothing follows it.
std::optional<VerbObjectPhrase> extract_leading_verb_object(std::string_view sentence,
                                                            const VerbLexicon& lexicon);

struct CorpusStats {
    std::size_t messages = 0;
    std::size_t verb_object_messages = 0;
    std::map<std::size_t, std::size_t> sentence_histogram;
    std::map<std::string, std::size_t> verb_histogram;

    /// Share of messages whose first sentence opens with verb + object; 0 when empty.
    double verb_object_fraction() const;

    void merge(const CorpusStats& other);

    friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const std::vector<Commit>& commits, const VerbLexicon& lexicon);

nlohmann::json to_json(const CorpusStats& stats);

}  // namespace commitverb
