#include "commitverb/corpus.hpp"
#include "commitverb/corpus_io.hpp"
#include "commitverb/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace commitverb;

TEST_CASE("merge and rollback detection looks only at the first token") {
    CHECK(is_merge_or_rollback("Merge branch 'master'"));
    CHECK(is_merge_or_rollback("merge commits X and Y"));
    CHECK(is_merge_or_rollback("  rollback bad deploy"));
    CHECK(is_merge_or_rollback("ROLLBACK"));
    CHECK(is_merge_or_rollback("\n\tMerge\npull request"));
    CHECK_FALSE(is_merge_or_rollback("Fix null check"));
    CHECK_FALSE(is_merge_or_rollback("Merged branch"));
    CHECK_FALSE(is_merge_or_rollback("Merge-safe changes"));
    CHECK_FALSE(is_merge_or_rollback("Do not merge"));
    CHECK_FALSE(is_merge_or_rollback(""));
}

TEST_CASE("message validity") {
    CHECK_FALSE(is_valid_message(""));
    CHECK_FALSE(is_valid_message(" \n\t\r "));
    CHECK(is_valid_message("update docs"));
    CHECK(is_valid_message("Fix bug.\n\nBody text\twith tab\r\n"));
    CHECK_FALSE(is_valid_message("fix \xC3\xBC" "berflow"));
    CHECK_FALSE(is_valid_message("bell\a"));
    CHECK_FALSE(is_valid_message(std::string("nul\0byte", 8)));
}

TEST_CASE("diff validity honours size and ASCII rules") {
    FilterPolicy policy;
    CHECK(is_valid_diff("0123456789", policy));
    CHECK(is_valid_diff(std::string(kDefaultMaxDiffBytes, 'a'), policy));
    CHECK_FALSE(is_valid_diff(std::string(kDefaultMaxDiffBytes + 1, 'a'), policy));
    CHECK_FALSE(is_valid_diff("+caf\xC3\xA9", policy));

    policy.ascii_only_diff = false;
    CHECK(is_valid_diff("+caf\xC3\xA9", policy));
    policy.max_diff_bytes = 3;
    CHECK_FALSE(is_valid_diff("abcd", policy));
}

TEST_CASE("filter_corpus charges each commit to its first failing rule") {
    const std::string huge(2 * kDefaultMaxDiffBytes, 'x');
    std::vector<Commit> commits = {
        {"ok", "Fix bug", "+x"},
        {"merge", "merge a b", "+x"},
        {"both", "", huge},
        {"merge_huge", "Merge stuff", huge},
        {"huge", "Add file", huge},
    };
    auto result = filter_corpus(commits);
    REQUIRE(result.kept.size() == 1);
    CHECK(result.kept[0].id == "ok");
    CHECK(result.tally == FilterTally{1, 2, 1});

    SUBCASE("disabled rules") {
        FilterPolicy policy;
        policy.drop_merge_rollback = false;
        policy.max_diff_bytes = huge.size();
        auto relaxed = filter_corpus(commits, policy);
        CHECK(relaxed.kept.size() == 4);
        CHECK(relaxed.tally == FilterTally{1, 0, 0});
    }
    SUBCASE("zero byte limit is a usage error") {
        FilterPolicy policy;
        policy.max_diff_bytes = 0;
        CHECK_THROWS_AS(filter_corpus(commits, policy), UsageError);
    }
}

TEST_CASE("filter invariants over random corpora") {
    std::mt19937 rng(1234);
    const std::vector<std::string> messages = {"", "  ", "Fix it", "merge x", "Rollback y", "caf\xC3\xA9", "Add z\n\nbody"};
    const std::vector<std::string> diffs = {"", "+a\n", "+\xFF\n", std::string(300, 'd'), std::string(50, 'e')};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Commit> commits;
        std::size_t n = rng() % 30;
        for (std::size_t i = 0; i < n; ++i)
            commits.push_back({std::to_string(i), messages[rng() % messages.size()], diffs[rng() % diffs.size()]});
        FilterPolicy policy;
        policy.max_diff_bytes = 1 + rng() % 400;

        auto first = filter_corpus(commits, policy);
        CHECK(first.kept.size() + first.tally.total() == commits.size());

        auto again = filter_corpus(first.kept, policy);
        CHECK(again.kept == first.kept);
        CHECK(again.tally.total() == 0);

        // Raising the limit never drops a kept diff.
        FilterPolicy looser = policy;
        looser.max_diff_bytes += 1 + rng() % 400;
        for (const auto& c : commits)
            if (is_valid_diff(c.diff, policy)) CHECK(is_valid_diff(c.diff, looser));
    }
}

TEST_CASE("corpus file reading") {
    SUBCASE("records come back in order and verbatim") {
        std::vector<Commit> commits = {{"a1", "Fix \"quotes\"\n\nbody\r\n", "+x\n-y\n\ttab"}, {"b2", "Add", ""}};
        std::stringstream buffer;
        write_corpus(buffer, commits);
        CHECK(read_corpus(buffer) == commits);
    }
    SUBCASE("empty input") {
        std::istringstream empty("");
        CHECK(read_corpus(empty).empty());
    }
    SUBCASE("malformed second line cites line 2") {
        std::istringstream in(R"({"id":"a","message":"m","diff":"d"})"
                              "\n{not json}\n");
        try {
            read_corpus(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("missing and mistyped fields") {
        std::istringstream missing(R"({"id":"a","message":"m"})");
        CHECK_THROWS_AS(read_corpus(missing), ParseError);
        std::istringstream mistyped(R"({"id":1,"message":"m","diff":"d"})");
        CHECK_THROWS_AS(read_corpus(mistyped), ParseError);
        std::istringstream array("[1,2]");
        CHECK_THROWS_AS(read_corpus(array), ParseError);
    }
    SUBCASE("ids must be non-empty and unique") {
        std::istringstream dup(R"({"id":"a","message":"m","diff":"d"})"
                               "\n"
                               R"({"id":"a","message":"m","diff":"d"})");
        try {
            read_corpus(dup);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        std::istringstream empty_id(R"({"id":"","message":"m","diff":"d"})");
        CHECK_THROWS_AS(read_corpus(empty_id), ParseError);
    }
    SUBCASE("unreadable file") {
        CHECK_THROWS_AS(read_corpus(std::filesystem::path("/nonexistent/corpus.jsonl")), IoError);
    }
}

TEST_CASE("labeled files carry an integer label in 1..15") {
    std::vector<LabeledDiff> labeled = {{"x", "Fix it", "+a", 2}, {"y", "Add it", "+b", 15}};
    std::stringstream buffer;
    write_labeled(buffer, labeled);
    CHECK(read_labeled(buffer) == labeled);

    // A labeled file is also a valid corpus file.
    std::stringstream again;
    write_labeled(again, labeled);
    auto commits = read_corpus(again);
    REQUIRE(commits.size() == 2);
    CHECK(commits[1].id == "y");

    std::istringstream bad(R"({"id":"a","message":"m","diff":"d","label":16})");
    CHECK_THROWS_AS(read_labeled(bad), ParseError);
    std::istringstream missing(R"({"id":"a","message":"m","diff":"d"})");
    CHECK_THROWS_AS(read_labeled(missing), ParseError);
}

TEST_CASE("non-UTF-8 bytes are replaced on write so the file stays parseable") {
    std::stringstream buffer;
    write_corpus(buffer, {{"a", "msg", "+\xFF\xFE"}});
    auto commits = read_corpus(buffer);
    REQUIRE(commits.size() == 1);
    CHECK_FALSE(is_valid_diff(commits[0].diff, FilterPolicy{}));
}
