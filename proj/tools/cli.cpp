#include "cli.hpp"

#include "commitverb/commitverb.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace commitverb::cli {

namespace {

void print_version(std::ostream& out) {
    out << "commitverb " << kToolVersion << " (model format " << kModelFormatMajor << "." << kModelFormatMinor
        << ")\n";
}

VerbLexicon load_lexicon(const RunConfig& config) {
    return config.lexicon.empty() ? VerbLexicon::bundled() : VerbLexicon::from_file(config.lexicon);
}

int run_ingest(const RunConfig& config, std::ostream& err) {
    auto result = ingest_repo(config.repo, config.out);
    err << "ingest: wrote " << result.written << " commits to " << config.out.string() << "\n";
    if (result.skipped) err << "ingest: warning: skipped " << result.skipped << " commits whose diff failed\n";
    return kOk;
}

int run_filter(const RunConfig& config, std::ostream& err) {
    auto commits = read_corpus(config.in);
    auto result = filter_corpus(commits, config.policy);
    write_corpus(config.out, result.kept);
    err << "filter: read " << commits.size() << ", kept " << result.kept.size() << "\n"
        << "filter: rejected invalid_message=" << result.tally.invalid_message
        << " merge_or_rollback=" << result.tally.merge_or_rollback
        << " invalid_diff=" << result.tally.invalid_diff << "\n";
    return kOk;
}

int run_analyze(const RunConfig& config, std::ostream& err) {
    auto stats = corpus_stats(read_corpus(config.in), load_lexicon(config));
    write_text_file(config.report, to_json(stats).dump(2) + "\n");
    err << "analyze: " << stats.messages << " messages, verb+object fraction " << stats.verb_object_fraction()
        << "\n";
    return kOk;
}

int run_label(const RunConfig& config, std::ostream& err) {
    auto commits = read_corpus(config.in);
    auto result = label_corpus(commits, builtin_table(), load_lexicon(config));
    write_labeled(config.out, result.labeled);
    err << "label: labeled " << result.labeled.size() << " of " << commits.size() << " commits\n";
    for (const auto& [group, count] : result.group_counts) err << "label: group " << group << ": " << count << "\n";
    return kOk;
}

int run_split(const RunConfig& config, std::ostream& err) {
    auto labeled = read_labeled(config.in);
    auto parts = config.stratified ? split_stratified(labeled, config.test_count, config.seed)
                                   : split(labeled, config.test_count, config.seed);
    write_labeled(config.train_out, parts.train);
    write_labeled(config.test_out, parts.test);
    err << "split: train " << parts.train.size() << ", test " << parts.test.size() << "\n";
    return kOk;
}

int run_train(const RunConfig& config, std::ostream& err) {
    auto labeled = read_labeled(config.in);
    if (labeled.empty()) throw UsageError("training file holds no labeled diffs");

    std::vector<std::vector<std::string>> docs;
    docs.reserve(labeled.size());
    for (const auto& item : labeled) docs.push_back(tokenize_diff(item.diff));
    auto vocabulary = build_vocabulary(docs, config.min_df);

    std::vector<LabeledVector> examples;
    examples.reserve(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i)
        examples.push_back({vectorize(docs[i], vocabulary), labeled[i].label});
    if (config.oversample) examples = oversample(examples, config.seed);

    auto model = train(examples, std::move(vocabulary), config.alpha);
    save_model(model, config.model);
    err << "train: " << examples.size() << " examples, " << model.vocabulary.size() << " terms, "
        << model.class_ids.size() << " classes\n";
    return kOk;
}

Prediction predict_diff(const NBModel& model, const std::string& diff) {
    return predict(model, vectorize(tokenize_diff(diff), model.vocabulary));
}

int run_predict(const RunConfig& config, std::ostream& err) {
    auto model = load_model(config.model);
    auto commits = read_corpus(config.in);

    std::ofstream out(config.out, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + config.out.string() + " for writing");
    for (const auto& commit : commits) {
        auto prediction = predict_diff(model, commit.diff);
        nlohmann::ordered_json scores = nlohmann::ordered_json::object();
        for (const auto& [group, score] : prediction.log_scores) scores[std::to_string(group)] = score;
        nlohmann::ordered_json record;
        record["id"] = commit.id;
        record["label"] = prediction.label;
        record["log_scores"] = std::move(scores);
        out << record.dump() << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failure on " + config.out.string());
    err << "predict: " << commits.size() << " predictions\n";
    return kOk;
}

int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto model = load_model(config.model);
    auto test = read_labeled(config.test);
    std::vector<GroupId> truth, predicted;
    truth.reserve(test.size());
    predicted.reserve(test.size());
    for (const auto& item : test) {
        truth.push_back(item.label);
        predicted.push_back(predict_diff(model, item.diff).label);
    }
    auto report = evaluate(truth, predicted);
    write_text_file(config.report, to_json(report).dump(2) + "\n");
    out << format_table(report);
    err << "evaluate: report written to " << config.report.string() << "\n";
    return kOk;
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Mine commit corpora and predict commit-message verb groups from diffs", "commitverb"};
    app.set_config("--config", "", "Optional TOML/INI file with option defaults");
    bool version = false;
    app.add_flag("--version", version, "Print tool and model-format versions");

    auto* ingest = app.add_subcommand("ingest", "Extract commits and first-parent diffs from a git repository");
    ingest->add_option("--repo", config.repo, "Repository path")->required();
    ingest->add_option("--out", config.out, "Corpus file to write")->required();

    auto* filter = app.add_subcommand("filter", "Drop invalid, merge/rollback and oversized/non-ASCII commits");
    filter->add_option("--in", config.in, "Input corpus")->required();
    filter->add_option("--out", config.out, "Filtered corpus")->required();
    filter->add_option("--max-diff-bytes", config.policy.max_diff_bytes, "Largest diff kept, in bytes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bool keep_merges = false, allow_non_ascii = false;
    filter->add_flag("--keep-merges", keep_merges, "Keep merge and rollback commits");
    filter->add_flag("--allow-non-ascii", allow_non_ascii, "Keep non-ASCII messages and diffs");

    auto* analyze = app.add_subcommand("analyze", "Sentence and leading verb+object statistics");
    analyze->add_option("--in", config.in, "Input corpus")->required();
    analyze->add_option("--lexicon", config.lexicon, "Verb lexicon file (one lemma per line)");
    analyze->add_option("--report", config.report, "JSON report to write")->required();

    auto* label = app.add_subcommand("label", "Label diffs with the verb group of their message");
    label->add_option("--in", config.in, "Input corpus")->required();
    label->add_option("--out", config.out, "Labeled file to write")->required();
    label->add_option("--lexicon", config.lexicon, "Verb lexicon file (one lemma per line)");

    auto* splitter = app.add_subcommand("split", "Seeded random train/test split of a labeled file");
    splitter->add_option("--in", config.in, "Labeled file")->required();
    splitter->add_option("--test-count", config.test_count, "Number of test items")->required();
    splitter->add_option("--train-out", config.train_out, "Training half")->required();
    splitter->add_option("--test-out", config.test_out, "Test half")->required();
    splitter->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    splitter->add_flag("--stratified", config.stratified, "Allocate test items per class proportionally");

    auto* trainer = app.add_subcommand("train", "Train the Naive Bayes verb-group classifier");
    trainer->add_option("--in", config.in, "Labeled training file")->required();
    trainer->add_option("--model", config.model, "Model file to write")->required();
    trainer->add_option("--alpha", config.alpha, "Additive smoothing")->capture_default_str();
    trainer->add_option("--min-df", config.min_df, "Minimum document frequency of a term")->capture_default_str();
    trainer->add_flag("--oversample", config.oversample, "Duplicate minority-class examples to balance classes");
    trainer->add_option("--seed", config.seed, "Random seed for oversampling")->capture_default_str();

    auto* predictor = app.add_subcommand("predict", "Predict verb groups for a corpus");
    predictor->add_option("--model", config.model, "Model file")->required();
    predictor->add_option("--in", config.in, "Input corpus")->required();
    predictor->add_option("--out", config.out, "Predictions file to write")->required();

    auto* evaluator = app.add_subcommand("evaluate", "Score a model on a labeled test file");
    evaluator->add_option("--model", config.model, "Model file")->required();
    evaluator->add_option("--test", config.test, "Labeled test file")->required();
    evaluator->add_option("--report", config.report, "JSON report to write")->required();

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        if (code != 0 && e.get_name() != "CallForHelp") err << app.help();
        return code == 0 ? kOk : kUsage;
    }

    if (version) {
        print_version(out);
        return kOk;
    }
    auto chosen = app.get_subcommands();
    if (chosen.empty()) {
        err << "commitverb: a subcommand is required\n" << app.help();
        return kUsage;
    }
    config.subcommand = chosen.front()->get_name();
    config.policy.drop_merge_rollback = !keep_merges;
    if (allow_non_ascii) {
        config.policy.ascii_only_diff = false;
        config.policy.english_only_message = false;
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "ingest") return run_ingest(config, err);
        if (config.subcommand == "filter") return run_filter(config, err);
        if (config.subcommand == "analyze") return run_analyze(config, err);
        if (config.subcommand == "label") return run_label(config, err);
        if (config.subcommand == "split") return run_split(config, err);
        if (config.subcommand == "train") return run_train(config, err);
        if (config.subcommand == "predict") return run_predict(config, err);
        if (config.subcommand == "evaluate") return run_evaluate(config, out, err);
        err << "commitverb: unknown subcommand '" << config.subcommand << "'\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "commitverb " << config.subcommand << ": usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "commitverb " << config.subcommand << ": parse error: " << e.what() << "\n";
        return kDataError;
    } catch (const ModelFormatError& e) {
        err << "commitverb " << config.subcommand << ": model error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        // IoError, IngestError, EnvironmentError and JSON failures.
        err << "commitverb " << config.subcommand << ": error: " << e.what() << "\n";
        return kDataError;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(argc, argv, out, err);
    if (auto* code = std::get_if<int>(&parsed)) return *code;
    return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace commitverb::cli
