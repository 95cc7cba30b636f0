#pragma once

#include "commitverb/verb_groups.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace commitverb {

/// Marks which of n items go to the test set. Uniform sample of test_count
/// positions without replacement. Throws UsageError unless 0 < test_count < n.
std::vector<bool> select_test_items(std::size_t n, std::size_t test_count, std::uint64_t seed);

/// Same, but allocates test_count across labels in proportion to class size
/// (largest remainder, ties to the smaller group id) and samples within each class.
std::vector<bool> select_test_items_stratified(std::span<const GroupId> labels, std::size_t test_count,
                                               std::uint64_t seed);

template <typename T>
struct Split {
    std::vector<T> train;
    std::vector<T> test;
};

/// Both halves keep the original relative order.
template <typename T>
Split<T> split(const std::vector<T>& items, std::size_t test_count, std::uint64_t seed) {
    auto in_test = select_test_items(items.size(), test_count, seed);
    Split<T> out;
    for (std::size_t i = 0; i < items.size(); ++i) (in_test[i] ? out.test : out.train).push_back(items[i]);
    return out;
}

Split<LabeledDiff> split_stratified(const std::vector<LabeledDiff>& items, std::size_t test_count,
                                    std::uint64_t seed);

struct ClassMetrics {
    std::size_t true_count = 0;
    std::size_t predicted_count = 0;
    std::size_t correct = 0;
    /// Absent when nothing was predicted as / labeled with the class.
    std::optional<double> precision;
    std::optional<double> recall;
};

struct EvaluationReport {
    /// confusion[truth - 1][predicted - 1]
    std::array<std::array<std::size_t, kGroupCount>, kGroupCount> confusion{};
    std::array<ClassMetrics, kGroupCount> per_class{};
    std::size_t test_count = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;
    double micro_precision = 0.0;
    double micro_recall = 0.0;
    std::optional<double> macro_precision;
    std::optional<double> macro_recall;

    std::size_t confusion_at(GroupId truth, GroupId predicted) const {
        return confusion[std::size_t(truth - 1)][std::size_t(predicted - 1)];
    }
    const ClassMetrics& metrics(GroupId group) const { return per_class[std::size_t(group - 1)]; }
};

/// Throws UsageError on empty or mismatched inputs or labels outside 1..15.
EvaluationReport evaluate(std::span<const GroupId> truth, std::span<const GroupId> predicted);

/// Report JSON keys: test_count, correct, accuracy, micro_precision,
/// micro_recall, macro_precision, macro_recall (null when undefined),
/// per_class (array of {group, true, predicted, correct, precision, recall}),
/// confusion (15x15, rows = true group).
nlohmann::json to_json(const EvaluationReport& report);

/// Human-readable summary table.
std::string format_table(const EvaluationReport& report);

}  // namespace commitverb
