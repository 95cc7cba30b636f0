#include "commitverb/errors.hpp"
#include "commitverb/features.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace commitverb;
using Tokens = std::vector<std::string>;

TEST_CASE("diff tokenization") {
    CHECK(tokenize_diff("+ int producerInfo = 0;") == Tokens{"int", "producerinfo", "0"});
    CHECK(tokenize_diff("@@ -1,3 +1,4 @@").empty());
    CHECK(tokenize_diff("").empty());
    CHECK(tokenize_diff("diff --git a/x.c b/x.c\nindex 1..2 100644\n--- a/x.c\n+++ b/x.c\n@@ -1 +1 @@\n-old_name\n+new_name(1)")
          == Tokens{"old_name", "new_name", "1"});
    CHECK(tokenize_diff(" context line\n+MAX_SIZE=0x1F") == Tokens{"context", "line", "max_size", "0x1f"});
    CHECK(tokenize_diff("+caf\xC3\xA9 bar") == Tokens{"caf", "bar"});
    // Only lines that begin with a marker are metadata.
    CHECK(tokenize_diff("+ diff index") == Tokens{"diff", "index"});
}

TEST_CASE("vocabulary construction") {
    SUBCASE("idf of a term in 1 of 4 documents") {
        auto vocab = build_vocabulary({{"a"}, {"b"}, {"b"}, {"b"}}, 1);
        auto i = vocab.index_of("a");
        REQUIRE(i);
        CHECK(vocab.at(*i).idf == doctest::Approx(1.9163).epsilon(1e-4));
        CHECK(vocab.at(*i).idf == std::log(5.0 / 2.0) + 1.0);
    }
    SUBCASE("term in every document has idf 1") {
        auto vocab = build_vocabulary({{"x", "y"}, {"x"}, {"x", "x"}}, 1);
        CHECK(vocab.at(*vocab.index_of("x")).idf == 1.0);
        CHECK(vocab.at(*vocab.index_of("x")).document_frequency == 3);
    }
    SUBCASE("min_df drops rare terms") {
        auto vocab = build_vocabulary({{"a", "b"}, {"b"}, {"b"}, {"b"}}, 2);
        CHECK_FALSE(vocab.index_of("a"));
        CHECK(vocab.index_of("b") == 0u);
        CHECK(vocab.total_documents() == 4);
    }
    SUBCASE("indices follow lexicographic order") {
        auto vocab = build_vocabulary({{"zeta", "alpha", "mid"}}, 1);
        CHECK(vocab.terms()[0].term == "alpha");
        CHECK(vocab.terms()[1].term == "mid");
        CHECK(vocab.terms()[2].term == "zeta");
    }
    SUBCASE("zero documents") {
        CHECK_THROWS_AS(build_vocabulary({}, 1), UsageError);
    }
    SUBCASE("validated construction") {
        CHECK_THROWS_AS(Vocabulary({{"b", 1, 1.0}, {"a", 1, 1.0}}, 2), UsageError);
        CHECK_THROWS_AS(Vocabulary({{"a", 3, 1.0}}, 2), UsageError);
        CHECK_THROWS_AS(Vocabulary({{"a", 1, 0.0}}, 2), UsageError);
    }
}

TEST_CASE("vocabulary invariants over random documents") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Tokens> docs(1 + rng() % 8);
        for (auto& doc : docs)
            for (std::size_t k = rng() % 10; k > 0; --k) doc.push_back(std::string(1, char('a' + rng() % 6)));
        std::size_t min_df = 1 + rng() % 3;
        auto vocab = build_vocabulary(docs, min_df);
        for (const auto& t : vocab.terms()) {
            CHECK(t.document_frequency >= std::max<std::size_t>(1, min_df));
            CHECK(t.document_frequency <= vocab.total_documents());
            CHECK(t.idf == smoothed_idf(docs.size(), t.document_frequency));
            CHECK(t.idf >= 1.0);
        }

        // Token order within a document does not matter.
        auto shuffled = docs;
        for (auto& doc : shuffled) std::shuffle(doc.begin(), doc.end(), rng);
        CHECK(build_vocabulary(shuffled, min_df) == vocab);
    }
}

TEST_CASE("vectorize") {
    SUBCASE("tf with unit idf") {
        Vocabulary vocab({{"a", 1, 1.0}, {"b", 1, 1.0}, {"c", 1, 1.0}}, 1);
        auto v = vectorize({"a", "a", "b", "c"}, vocab);
        CHECK(v.weight(0) == 0.5);
        CHECK(v.weight(1) == 0.25);
        CHECK(v.weight(2) == 0.25);
    }
    SUBCASE("out-of-vocabulary tokens only count in the denominator") {
        Vocabulary vocab({{"a", 1, 2.0}, {"b", 1, 3.0}}, 1);
        auto v = vectorize({"a", "a", "b", "c"}, vocab);
        CHECK(v.size() == 2);
        CHECK(v.weight(0) == 1.0);
        CHECK(v.weight(1) == 0.25 * 3.0);
    }
    SUBCASE("empty input") {
        Vocabulary vocab({{"a", 1, 1.0}}, 1);
        CHECK(vectorize({}, vocab).empty());
        CHECK(vectorize({"zzz"}, vocab).empty());
    }
    SUBCASE("repeating a document leaves tf unchanged and indices stay in range") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            Tokens doc;
            for (std::size_t k = 1 + rng() % 12; k > 0; --k) doc.push_back(std::string(1, char('a' + rng() % 5)));
            auto vocab = build_vocabulary({doc, {"a", "b"}, {"c"}}, 1);
            Tokens repeated;
            std::size_t times = 2 + rng() % 3;
            for (std::size_t r = 0; r < times; ++r) repeated.insert(repeated.end(), doc.begin(), doc.end());
            auto once = vectorize(doc, vocab);
            auto many = vectorize(repeated, vocab);
            REQUIRE(once.size() == many.size());
            for (std::size_t i = 0; i < once.size(); ++i) {
                CHECK(once.entries()[i].index == many.entries()[i].index);
                CHECK(many.entries()[i].weight == doctest::Approx(once.entries()[i].weight).epsilon(1e-14));
                CHECK(once.entries()[i].index < vocab.size());
            }
        }
    }
}

TEST_CASE("sparse vector validation") {
    CHECK_THROWS_AS(SparseVector({{1, 0.5}, {1, 0.5}}), UsageError);
    CHECK_THROWS_AS(SparseVector({{2, 0.5}, {1, 0.5}}), UsageError);
    CHECK_THROWS_AS(SparseVector({{0, 0.0}}), UsageError);
    CHECK(SparseVector({{0, 0.1}, {4, 0.2}}).weight(3) == 0.0);
}
