#include "commitverb/commitverb.hpp"
#include "test_support.hpp"

#include <benchmark/benchmark.h>

using namespace commitverb;

namespace {

std::vector<LabeledDiff> corpus(std::size_t per_class) {
    testing::SyntheticSpec spec;
    for (GroupId g = kMinGroup; g <= kMaxGroup; ++g) spec.class_sizes[g] = per_class;
    spec.lines_per_diff = 40;
    spec.background_vocabulary = 2000;
    return testing::synthetic_marker_corpus(spec);
}

struct Prepared {
    std::vector<std::vector<std::string>> tokens;
    Vocabulary vocab;
    std::vector<LabeledVector> examples;
};

Prepared prepare(const std::vector<LabeledDiff>& items) {
    Prepared p{{}, Vocabulary({}, 1), {}};
    for (const auto& item : items) p.tokens.push_back(tokenize_diff(item.diff));
    p.vocab = build_vocabulary(p.tokens);
    for (std::size_t i = 0; i < items.size(); ++i) p.examples.push_back({vectorize(p.tokens[i], p.vocab), items[i].label});
    return p;
}

void BM_TokenizeDiff(benchmark::State& state) {
    auto items = corpus(10);
    std::size_t bytes = 0;
    for (const auto& item : items) bytes += item.diff.size();
    for (auto _ : state)
        for (const auto& item : items) benchmark::DoNotOptimize(tokenize_diff(item.diff));
    state.SetBytesProcessed(std::int64_t(state.iterations() * bytes));
}
BENCHMARK(BM_TokenizeDiff);

void BM_BuildVocabulary(benchmark::State& state) {
    auto p = prepare(corpus(std::size_t(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(build_vocabulary(p.tokens));
    state.SetItemsProcessed(std::int64_t(state.iterations() * p.tokens.size()));
}
BENCHMARK(BM_BuildVocabulary)->Arg(20)->Arg(200);

void BM_Vectorize(benchmark::State& state) {
    auto p = prepare(corpus(20));
    for (auto _ : state)
        for (const auto& doc : p.tokens) benchmark::DoNotOptimize(vectorize(doc, p.vocab));
    state.SetItemsProcessed(std::int64_t(state.iterations() * p.tokens.size()));
}
BENCHMARK(BM_Vectorize);

void BM_Train(benchmark::State& state) {
    auto p = prepare(corpus(std::size_t(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(train(p.examples, p.vocab));
    state.SetItemsProcessed(std::int64_t(state.iterations() * p.examples.size()));
}
BENCHMARK(BM_Train)->Arg(20)->Arg(200);

void BM_Predict(benchmark::State& state) {
    auto p = prepare(corpus(20));
    auto model = train(p.examples, p.vocab);
    for (auto _ : state)
        for (const auto& example : p.examples) benchmark::DoNotOptimize(predict(model, example.features));
    state.SetItemsProcessed(std::int64_t(state.iterations() * p.examples.size()));
}
BENCHMARK(BM_Predict);

void BM_CorpusStats(benchmark::State& state) {
    auto commits = read_corpus(testing::data_dir() / "eda_fixture.jsonl");
    const auto& lexicon = VerbLexicon::bundled();
    for (auto _ : state) benchmark::DoNotOptimize(corpus_stats(commits, lexicon));
    state.SetItemsProcessed(std::int64_t(state.iterations() * commits.size()));
}
BENCHMARK(BM_CorpusStats);

}  // namespace

BENCHMARK_MAIN();
