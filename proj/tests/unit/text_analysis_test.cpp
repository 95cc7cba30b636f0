#include "commitverb/corpus_io.hpp"
#include "commitverb/errors.hpp"
#include "commitverb/text_analysis.hpp"
#include "commitverb/verb_groups.hpp"
#include "test_support.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace commitverb;

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' && c != '\v') out += c;
    return out;
}

}  // namespace

TEST_CASE("sentence splitting") {
    CHECK(split_sentences("Fix bug.").size() == 1);
    CHECK(split_sentences("Fix bug. Add test.").sentences == std::vector<std::string>{"Fix bug.", "Add test."});
    CHECK(split_sentences("Upgrade to v1.2 of lib").size() == 1);
    CHECK(split_sentences("Really?! Yes... done").sentences ==
          std::vector<std::string>{"Really?!", "Yes...", "done"});
    CHECK(split_sentences("Subject line\n\nBody paragraph").size() == 2);
    CHECK(split_sentences("Wrapped subject\ncontinues here").size() == 1);
    CHECK(split_sentences("Summary\n- first item\n* second item. Still one\n").sentences ==
          std::vector<std::string>{"Summary", "- first item", "* second item. Still one"});
    CHECK(split_sentences("-1 is not a bullet").size() == 1);
    CHECK(split_sentences("").empty());
    CHECK(split_sentences(" \n \n").empty());
}

TEST_CASE("sentence split covers the message's non-whitespace text") {
    std::mt19937 rng(99);
    const std::vector<std::string> pieces = {"Fix", "bug.", "v1.2", "-", "*", "?!", "\n", "\n\n", " ", "x",
                                             "e.g.", "Done!", "...", "\t", "- item", "word"};
    for (int trial = 0; trial < 500; ++trial) {
        std::string message;
        std::size_t n = 1 + rng() % 12;
        for (std::size_t i = 0; i < n; ++i) message += pieces[rng() % pieces.size()] + (rng() % 2 ? " " : "");
        auto split = split_sentences(message);
        std::string joined;
        for (const auto& s : split.sentences) {
            CHECK_FALSE(strip_spaces(s).empty());
            joined += strip_spaces(s);
        }
        CHECK(joined == strip_spaces(message));
        if (!strip_spaces(message).empty()) CHECK_FALSE(split.empty());
    }
}

TEST_CASE("lemmatizer") {
    CHECK(lemmatize_verb("Changing") == "change");
    CHECK(lemmatize_verb("fix") == "fix");
    CHECK(lemmatize_verb("implemented") == "implement");
    CHECK(lemmatize_verb("creating") == "create");
    CHECK(lemmatize_verb("renamed") == "rename");
    CHECK(lemmatize_verb("made") == "make");
    CHECK(lemmatize_verb("setting") == "set");
    CHECK(lemmatize_verb("set") == "set");
    CHECK(lemmatize_verb("stopped") == "stop");
    CHECK(lemmatize_verb("applies") == "apply");
    CHECK(lemmatize_verb("applied") == "apply");
    CHECK(lemmatize_verb("fixes") == "fix");
    CHECK(lemmatize_verb("uses") == "use");
    CHECK(lemmatize_verb("passes") == "pass");
    CHECK(lemmatize_verb("address") == "address");
    CHECK(lemmatize_verb("FIXED") == "fix");
    CHECK(lemmatize_verb("written") == "write");

    SUBCASE("outside the lexicon the stripped stem is returned") {
        VerbLexicon tiny = VerbLexicon::group_lemmas();
        CHECK(lemmatize_verb("creating", tiny) == "create");
        CHECK(lemmatize_verb("walking", tiny) == "walk");
        CHECK(lemmatize_verb("hopping", tiny) == "hop");
        CHECK(lemmatize_verb("xyz", tiny) == "xyz");
    }
}

TEST_CASE("lemmatizer is idempotent over inflections of lexicon verbs") {
    const auto& lexicon = VerbLexicon::bundled();
    std::size_t checked = 0;
    for (const auto& lemma : lexicon.lemmas()) {
        for (const std::string& form : {lemma, lemma + "s", lemma + "es", lemma + "ing", lemma + "ed"}) {
            auto once = lemmatize_verb(form, lexicon);
            CHECK_MESSAGE(lemmatize_verb(once, lexicon) == once, form);
            ++checked;
        }
    }
    for (const auto& [form, lemma] : irregular_verb_forms()) {
        auto once = lemmatize_verb(form, lexicon);
        CHECK(once == lemma);
        CHECK(lemmatize_verb(once, lexicon) == once);
    }
    CHECK(checked > 4000);
}

TEST_CASE("lexicon files") {
    auto lexicon = VerbLexicon::parse("# header\nFrobnicate\n\n  tweak  # inline comment\n");
    CHECK(lexicon.contains("frobnicate"));
    CHECK(lexicon.contains("tweak"));
    CHECK(lexicon.contains("add"));
    CHECK(lexicon.size() == builtin_table().size() + 2);
    CHECK_FALSE(VerbLexicon::bundled().contains("version"));
    CHECK(VerbLexicon::bundled().size() > 1000);
    CHECK_THROWS_AS(VerbLexicon::from_file("/nonexistent/lexicon.txt"), IoError);
}

TEST_CASE("leading verb and direct object") {
    const auto& lex = VerbLexicon::bundled();
    using P = VerbObjectPhrase;
    CHECK(extract_leading_verb_object("Changing the producer info", lex) == P{"change", "the producer info"});
    CHECK(extract_leading_verb_object("Changing the producer info.", lex) == P{"change", "the producer info"});
    CHECK_FALSE(extract_leading_verb_object("Version 2.0 release notes", lex));
    CHECK(extract_leading_verb_object("fix crash in parser", lex) == P{"fix", "crash"});
    CHECK(extract_leading_verb_object("Add a b c d e f g h", lex) == P{"add", "a b c d e f"});
    CHECK(extract_leading_verb_object("Remove foo, bar and baz", lex) == P{"remove", "foo"});
    CHECK(extract_leading_verb_object("fix: crash on start", lex) == P{"fix", "crash"});
    CHECK_FALSE(extract_leading_verb_object("Fix", lex));
    CHECK_FALSE(extract_leading_verb_object("Fix.", lex));
    CHECK_FALSE(extract_leading_verb_object("Fix. Things", lex));
    CHECK_FALSE(extract_leading_verb_object("Upgrade to 2.0", lex));
    CHECK_FALSE(extract_leading_verb_object("- fix leak", lex));
    CHECK_FALSE(extract_leading_verb_object("   ", lex));
}

TEST_CASE("noun-first sentences never yield a phrase") {
    const auto& lex = VerbLexicon::bundled();
    for (const char* s : {"Version bump to 3", "Typo in docs", "Readme tweaks", "Initial commit", "Minor cleanup",
                          "New parser for config", "Docs: explain flags", "Wip", "Changelog for 1.4",
                          "Javadoc fixes everywhere"}) {
        CHECK_MESSAGE(!extract_leading_verb_object(s, lex), s);
    }
}

TEST_CASE("corpus statistics") {
    const auto& lex = VerbLexicon::bundled();
    SUBCASE("single commit") {
        auto stats = corpus_stats({{"a", "Fix bug.", ""}}, lex);
        CHECK(stats.sentence_histogram == std::map<std::size_t, std::size_t>{{1, 1}});
        CHECK(stats.verb_histogram == std::map<std::string, std::size_t>{{"fix", 1}});
        CHECK(stats.verb_object_fraction() == 1.0);
    }
    SUBCASE("empty corpus") {
        auto stats = corpus_stats({}, lex);
        CHECK(stats.sentence_histogram.empty());
        CHECK(stats.verb_histogram.empty());
        CHECK(stats.verb_object_fraction() == 0.0);
    }
    SUBCASE("merging partial statistics is order independent") {
        auto commits = read_corpus(testing::data_dir() / "eda_fixture.jsonl");
        std::vector<Commit> head(commits.begin(), commits.begin() + 20), tail(commits.begin() + 20, commits.end());
        auto merged = corpus_stats(tail, lex);
        merged.merge(corpus_stats(head, lex));
        CHECK(merged == corpus_stats(commits, lex));
    }
}

TEST_CASE("fixture phrases match the reference oracle") {
    auto expected = nlohmann::json::parse(testing::read_file(testing::data_dir() / "eda_expected.json"));
    const auto& lex = VerbLexicon::bundled();
    for (const auto& commit : read_corpus(testing::data_dir() / "eda_fixture.jsonl")) {
        auto split = split_sentences(commit.message);
        auto phrase = extract_leading_verb_object(split.sentences.front(), lex);
        const auto& want = expected["phrases"][commit.id];
        if (want.is_null()) {
            CHECK_MESSAGE(!phrase, commit.id);
        } else {
            REQUIRE_MESSAGE(phrase, commit.id);
            CHECK(phrase->verb_lemma == want[0].get<std::string>());
            CHECK(phrase->object_text == want[1].get<std::string>());
        }
    }
}
