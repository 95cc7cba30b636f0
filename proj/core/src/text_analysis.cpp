#include "commitverb/text_analysis.hpp"

#include "commitverb/errors.hpp"
#include "commitverb/verb_groups.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace commitverb {

namespace detail {
extern const std::string_view kCommonVerbsText;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](char c) { return c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : c; });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string_view strip_non_alnum(std::string_view s) {
    while (!s.empty() && !is_alnum(s.front())) s.remove_prefix(1);
    while (!s.empty() && !is_alnum(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

bool is_bullet_line(std::string_view trimmed) {
    if (trimmed.empty() || (trimmed.front() != '-' && trimmed.front() != '*')) return false;
    return trimmed.size() == 1 || is_space(trimmed[1]);
}

void split_paragraph(std::string_view paragraph, std::vector<std::string>& out) {
    std::size_t start = 0;
    std::size_t i = 0;
    while (i < paragraph.size()) {
        if (!is_terminator(paragraph[i])) {
            ++i;
            continue;
        }
        std::size_t run_end = i;
        while (run_end < paragraph.size() && is_terminator(paragraph[run_end])) ++run_end;
        if (run_end == paragraph.size() || is_space(paragraph[run_end])) {
            auto piece = trim(paragraph.substr(start, run_end - start));
            if (!piece.empty()) out.emplace_back(piece);
            start = run_end;
        }
        i = run_end;
    }
    auto rest = trim(paragraph.substr(start));
    if (!rest.empty()) out.emplace_back(rest);
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool has_doubled_consonant(std::string_view stem) {
    if (stem.size() < 3) return false;
    char last = stem.back();
    return last == stem[stem.size() - 2] && !is_vowel(last) && is_alnum(last);
}

// Picks the first candidate the lexicon knows, else the fallback.
std::string first_known(std::initializer_list<std::string> candidates, std::string fallback,
                        const VerbLexicon& lexicon) {
    for (const auto& c : candidates)
        if (!c.empty() && lexicon.contains(c)) return c;
    return fallback;
}

// Restores a stem left after removing "-ing" or "-ed".
std::string restore_stem(std::string stem, const VerbLexicon& lexicon) {
    std::string undoubled = has_doubled_consonant(stem) ? stem.substr(0, stem.size() - 1) : stem;
    return first_known({stem, stem + "e", undoubled}, undoubled, lexicon);
}

}  // namespace

SentenceSplit split_sentences(std::string_view message) {
    SentenceSplit split;
    std::string paragraph;
    auto flush = [&] {
        split_paragraph(paragraph, split.sentences);
        paragraph.clear();
    };

    std::size_t pos = 0;
    while (pos <= message.size()) {
        std::size_t nl = message.find('\n', pos);
        if (nl == std::string_view::npos) nl = message.size();
        std::string_view line = message.substr(pos, nl - pos);
        pos = nl + 1;

        auto trimmed = trim(line);
        if (trimmed.empty()) {
            flush();
        } else if (is_bullet_line(trimmed)) {
            flush();
            split.sentences.emplace_back(trimmed);
        } else {
            if (!paragraph.empty()) paragraph += '\n';
            paragraph += line;
        }
    }
    flush();
    return split;
}

// -- lexicon ----------------------------------------------------------------

VerbLexicon::VerbLexicon(std::set<std::string, std::less<>> lemmas) : lemmas_(std::move(lemmas)) {}

VerbLexicon VerbLexicon::group_lemmas() {
    std::set<std::string, std::less<>> lemmas;
    for (const auto& [lemma, group] : builtin_table().entries()) lemmas.insert(lemma);
    return VerbLexicon(std::move(lemmas));
}

VerbLexicon VerbLexicon::parse(std::string_view text) {
    auto lexicon = group_lemmas();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) lexicon.lemmas_.insert(lowercase(line));
    }
    return lexicon;
}

const VerbLexicon& VerbLexicon::bundled() {
    static const VerbLexicon lexicon = parse(detail::kCommonVerbsText);
    return lexicon;
}

VerbLexicon VerbLexicon::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

// -- lemmatizer -------------------------------------------------------------

const std::map<std::string, std::string, std::less<>>& irregular_verb_forms() {
    static const std::map<std::string, std::string, std::less<>> forms = {
        {"made", "make"},          {"set", "set"},           {"setting", "set"},
        {"resetting", "reset"},    {"upsetting", "upset"},   {"built", "build"},
        {"rebuilt", "rebuild"},    {"wrote", "write"},       {"written", "write"},
        {"rewrote", "rewrite"},    {"rewritten", "rewrite"}, {"ran", "run"},
        {"got", "get"},            {"gotten", "get"},        {"went", "go"},
        {"gone", "go"},            {"goes", "go"},           {"did", "do"},
        {"done", "do"},            {"does", "do"},           {"undid", "undo"},
        {"undone", "undo"},        {"had", "have"},          {"has", "have"},
        {"was", "be"},             {"were", "be"},           {"is", "be"},
        {"are", "be"},             {"been", "be"},           {"took", "take"},
        {"taken", "take"},         {"gave", "give"},         {"given", "give"},
        {"found", "find"},         {"left", "leave"},        {"kept", "keep"},
        {"brought", "bring"},      {"began", "begin"},       {"begun", "begin"},
        {"broke", "break"},        {"broken", "break"},      {"chose", "choose"},
        {"chosen", "choose"},      {"fed", "feed"},          {"hid", "hide"},
        {"hidden", "hide"},        {"held", "hold"},         {"led", "lead"},
        {"lost", "lose"},          {"meant", "mean"},        {"paid", "pay"},
        {"said", "say"},           {"sent", "send"},         {"shown", "show"},
        {"spent", "spend"},        {"stuck", "stick"},       {"taught", "teach"},
        {"thought", "think"},      {"told", "tell"},         {"understood", "understand"},
        {"won", "win"},            {"threw", "throw"},       {"thrown", "throw"},
        {"drew", "draw"},          {"drawn", "draw"},        {"froze", "freeze"},
        {"frozen", "freeze"},      {"bound", "bind"},        {"sped", "speed"},
        {"dug", "dig"},            {"bought", "buy"},        {"caught", "catch"},
        {"sought", "seek"},        {"overrode", "override"}, {"overridden", "override"},
        {"forgot", "forget"},      {"forgotten", "forget"},  {"saw", "see"},
        {"seen", "see"},           {"knew", "know"},         {"known", "know"},
        {"grew", "grow"},          {"grown", "grow"},        {"shook", "shake"},
        {"stole", "steal"},        {"stolen", "steal"},      {"spoke", "speak"},
        {"spoken", "speak"},       {"woke", "wake"},         {"woken", "wake"},
        {"fell", "fall"},          {"fallen", "fall"},       {"felt", "feel"},
        {"heard", "hear"},         {"met", "meet"},          {"shot", "shoot"},
        {"slid", "slide"},         {"split", "split"},       {"splitting", "split"},
        {"put", "put"},            {"putting", "put"},       {"cut", "cut"},
        {"cutting", "cut"},        {"hit", "hit"},           {"hitting", "hit"},
        {"let", "let"},            {"letting", "let"},       {"quit", "quit"},
        {"quitting", "quit"},      {"shut", "shut"},         {"shutting", "shut"},
        {"read", "read"},          {"reread", "reread"},     {"lay", "lay"},
        {"laid", "lay"},           {"lying", "lie"},         {"tying", "tie"},
        {"dying", "die"},          {"became", "become"},     {"become", "become"},
        {"came", "come"},          {"come", "come"},         {"ate", "eat"},
        {"eaten", "eat"},          {"rode", "ride"},         {"ridden", "ride"},
        {"rose", "rise"},          {"risen", "rise"},        {"sold", "sell"},
        {"stood", "stand"},        {"struck", "strike"},     {"swept", "sweep"},
        {"swung", "swing"},        {"tore", "tear"},         {"torn", "tear"},
        {"wore", "wear"},          {"worn", "wear"},         {"withdrew", "withdraw"},
        {"withdrawn", "withdraw"}, {"wound", "wind"},        {"sank", "sink"},
        {"sunk", "sink"},          {"spun", "spin"},         {"spread", "spread"},
        {"cast", "cast"},          {"broadcast", "broadcast"}, {"forecast", "forecast"},
    };
    return forms;
}

std::string lemmatize_verb(std::string_view token, const VerbLexicon& lexicon) {
    std::string word = lowercase(token);
    if (word.empty()) return word;

    const auto& irregular = irregular_verb_forms();
    if (auto it = irregular.find(word); it != irregular.end()) return it->second;
    if (lexicon.contains(word)) return word;

    std::string_view w = word;
    if (ends_with(w, "ies") && w.size() > 4) {
        std::string stem(w.substr(0, w.size() - 3));
        return first_known({stem + "y", std::string(w.substr(0, w.size() - 1))}, stem + "y", lexicon);
    }
    if (ends_with(w, "es")) {
        std::string_view base = w.substr(0, w.size() - 2);
        if (ends_with(base, "s") || ends_with(base, "x") || ends_with(base, "z") ||
            ends_with(base, "ch") || ends_with(base, "sh")) {
            std::string drop_es(base);
            return first_known({drop_es, std::string(w.substr(0, w.size() - 1))}, drop_es, lexicon);
        }
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && w.size() > 3)
        return std::string(w.substr(0, w.size() - 1));
    if (ends_with(w, "ing") && w.size() > 4) return restore_stem(std::string(w.substr(0, w.size() - 3)), lexicon);
    if (ends_with(w, "ied") && w.size() > 4) {
        std::string stem(w.substr(0, w.size() - 3));
        return first_known({stem + "y"}, restore_stem(std::string(w.substr(0, w.size() - 2)), lexicon),
                           lexicon);
    }
    if (ends_with(w, "ed") && w.size() > 3) return restore_stem(std::string(w.substr(0, w.size() - 2)), lexicon);
    return word;
}

std::string lemmatize_verb(std::string_view token) { return lemmatize_verb(token, VerbLexicon::bundled()); }

// -- verb + object ----------------------------------------------------------

const std::set<std::string, std::less<>>& object_stop_words() {
    static const std::set<std::string, std::less<>> words = {
        "to", "for", "in", "on", "at", "with", "from", "by", "of",
        "and", "or", "so", "when", "which", "that", "because",
    };
    return words;
}

std::optional<VerbObjectPhrase> extract_leading_verb_object(std::string_view sentence,
                                                            const VerbLexicon& lexicon) {
    auto tokens = split_whitespace(sentence);
    if (tokens.empty()) return std::nullopt;

    auto verb_word = strip_non_alnum(tokens.front());
    if (verb_word.empty()) return std::nullopt;
    std::string lemma = lemmatize_verb(verb_word, lexicon);
    if (!lexicon.contains(lemma)) return std::nullopt;
    if (is_terminator(tokens.front().back())) return std::nullopt;

    const auto& stops = object_stop_words();
    std::vector<std::string_view> object;
    for (std::size_t i = 1; i < tokens.size() && object.size() < kMaxObjectTokens; ++i) {
        std::string_view raw = tokens[i];
        std::string key = lowercase(strip_non_alnum(raw));
        if (key.empty() || stops.count(key)) break;

        std::string_view kept = raw;
        bool closes = false;
        while (!kept.empty() && (is_terminator(kept.back()) || kept.back() == ',' ||
                                 kept.back() == ';' || kept.back() == ':')) {
            closes = true;
            kept.remove_suffix(1);
        }
        object.push_back(kept);
        if (closes) break;
    }
    if (object.empty()) return std::nullopt;

    VerbObjectPhrase phrase{std::move(lemma), {}};
    for (std::size_t i = 0; i < object.size(); ++i) {
        if (i) phrase.object_text += ' ';
        phrase.object_text += object[i];
    }
    return phrase;
}

// -- corpus statistics ------------------------------------------------------

double CorpusStats::verb_object_fraction() const {
    return messages == 0 ? 0.0 : double(verb_object_messages) / double(messages);
}

void CorpusStats::merge(const CorpusStats& other) {
    messages += other.messages;
    verb_object_messages += other.verb_object_messages;
    for (const auto& [k, v] : other.sentence_histogram) sentence_histogram[k] += v;
    for (const auto& [k, v] : other.verb_histogram) verb_histogram[k] += v;
}

CorpusStats corpus_stats(const std::vector<Commit>& commits, const VerbLexicon& lexicon) {
    CorpusStats stats;
    for (const auto& commit : commits) {
        auto split = split_sentences(commit.message);
        ++stats.messages;
        ++stats.sentence_histogram[split.size()];
        if (split.empty()) continue;
        if (auto phrase = extract_leading_verb_object(split.sentences.front(), lexicon)) {
            ++stats.verb_object_messages;
            ++stats.verb_histogram[phrase->verb_lemma];
        }
    }
    return stats;
}

nlohmann::json to_json(const CorpusStats& stats) {
    nlohmann::json sentences = nlohmann::json::object();
    for (const auto& [count, n] : stats.sentence_histogram) sentences[std::to_string(count)] = n;
    nlohmann::json verbs = nlohmann::json::object();
    for (const auto& [lemma, n] : stats.verb_histogram) verbs[lemma] = n;
    return {
        {"messages", stats.messages},
        {"sentence_histogram", std::move(sentences)},
        {"verb_histogram", std::move(verbs)},
        {"verb_object_messages", stats.verb_object_messages},
        {"verb_object_fraction", stats.verb_object_fraction()},
    };
}

}  // namespace commitverb
