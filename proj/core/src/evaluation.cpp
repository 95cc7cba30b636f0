#include "commitverb/evaluation.hpp"

#include "commitverb/errors.hpp"
#include "random.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

namespace commitverb {

namespace {

// Partial Fisher-Yates: the first k positions of the permutation.
std::vector<std::size_t> sample_positions(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + std::size_t(detail::uniform_below(rng, n - i));
        std::swap(order[i], order[j]);
    }
    order.resize(k);
    return order;
}

void check_test_count(std::size_t n, std::size_t test_count) {
    if (test_count == 0 || test_count >= n)
        throw UsageError("test count " + std::to_string(test_count) + " must be in 1.." +
                         (n == 0 ? std::string("0 (no items)") : std::to_string(n - 1)));
}

}  // namespace

std::vector<bool> select_test_items(std::size_t n, std::size_t test_count, std::uint64_t seed) {
    check_test_count(n, test_count);
    std::mt19937_64 rng(seed);
    std::vector<bool> in_test(n, false);
    for (auto pos : sample_positions(n, test_count, rng)) in_test[pos] = true;
    return in_test;
}

std::vector<bool> select_test_items_stratified(std::span<const GroupId> labels, std::size_t test_count,
                                               std::uint64_t seed) {
    const std::size_t n = labels.size();
    check_test_count(n, test_count);

    std::map<GroupId, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) members[labels[i]].push_back(i);

    // Largest-remainder allocation of test_count across classes.
    struct Share {
        GroupId group;
        std::size_t quota;
        std::size_t remainder;
    };
    std::vector<Share> shares;
    std::size_t assigned = 0;
    for (const auto& [group, idx] : members) {
        std::size_t scaled = idx.size() * test_count;
        shares.push_back({group, scaled / n, scaled % n});
        assigned += scaled / n;
    }
    std::vector<std::size_t> order(shares.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return shares[a].remainder > shares[b].remainder; });
    for (std::size_t k = 0; assigned < test_count && k < order.size(); ++k, ++assigned) ++shares[order[k]].quota;

    std::mt19937_64 rng(seed);
    std::vector<bool> in_test(n, false);
    for (const auto& share : shares) {
        const auto& idx = members[share.group];
        for (auto pos : sample_positions(idx.size(), std::min(share.quota, idx.size()), rng)) in_test[idx[pos]] = true;
    }
    return in_test;
}

Split<LabeledDiff> split_stratified(const std::vector<LabeledDiff>& items, std::size_t test_count,
                                    std::uint64_t seed) {
    std::vector<GroupId> labels;
    labels.reserve(items.size());
    for (const auto& item : items) labels.push_back(item.label);
    auto in_test = select_test_items_stratified(labels, test_count, seed);
    Split<LabeledDiff> out;
    for (std::size_t i = 0; i < items.size(); ++i) (in_test[i] ? out.test : out.train).push_back(items[i]);
    return out;
}

EvaluationReport evaluate(std::span<const GroupId> truth, std::span<const GroupId> predicted) {
    if (truth.size() != predicted.size())
        throw UsageError("truth and prediction lengths differ (" + std::to_string(truth.size()) + " vs " +
                         std::to_string(predicted.size()) + ")");
    if (truth.empty()) throw UsageError("cannot evaluate an empty test set");

    EvaluationReport report;
    report.test_count = truth.size();
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (!is_valid_group(truth[i]) || !is_valid_group(predicted[i]))
            throw UsageError("label outside 1..15 at position " + std::to_string(i));
        ++report.confusion[std::size_t(truth[i] - 1)][std::size_t(predicted[i] - 1)];
    }

    double precision_sum = 0.0, recall_sum = 0.0;
    std::size_t precision_classes = 0, recall_classes = 0;
    for (std::size_t g = 0; g < kGroupCount; ++g) {
        auto& m = report.per_class[g];
        m.correct = report.confusion[g][g];
        for (std::size_t k = 0; k < kGroupCount; ++k) {
            m.true_count += report.confusion[g][k];
            m.predicted_count += report.confusion[k][g];
        }
        report.correct += m.correct;
        if (m.predicted_count > 0) {
            m.precision = double(m.correct) / double(m.predicted_count);
            precision_sum += *m.precision;
            ++precision_classes;
        }
        if (m.true_count > 0) {
            m.recall = double(m.correct) / double(m.true_count);
            recall_sum += *m.recall;
            ++recall_classes;
        }
    }

    const double total = double(report.test_count);
    report.accuracy = double(report.correct) / total;
    // Single-label multiclass: every item is one prediction and one truth.
    std::size_t predicted_total = 0, true_total = 0;
    for (const auto& m : report.per_class) {
        predicted_total += m.predicted_count;
        true_total += m.true_count;
    }
    report.micro_precision = double(report.correct) / double(predicted_total);
    report.micro_recall = double(report.correct) / double(true_total);
    if (precision_classes) report.macro_precision = precision_sum / double(precision_classes);
    if (recall_classes) report.macro_recall = recall_sum / double(recall_classes);
    return report;
}

nlohmann::json to_json(const EvaluationReport& report) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };

    nlohmann::json per_class = nlohmann::json::array();
    for (std::size_t g = 0; g < kGroupCount; ++g) {
        const auto& m = report.per_class[g];
        per_class.push_back({
            {"group", int(g + 1)},
            {"true", m.true_count},
            {"predicted", m.predicted_count},
            {"correct", m.correct},
            {"precision", opt(m.precision)},
            {"recall", opt(m.recall)},
        });
    }
    nlohmann::json confusion = nlohmann::json::array();
    for (const auto& row : report.confusion) confusion.push_back(row);

    return {
        {"test_count", report.test_count},
        {"correct", report.correct},
        {"accuracy", report.accuracy},
        {"micro_precision", report.micro_precision},
        {"micro_recall", report.micro_recall},
        {"macro_precision", opt(report.macro_precision)},
        {"macro_recall", opt(report.macro_recall)},
        {"per_class", std::move(per_class)},
        {"confusion", std::move(confusion)},
    };
}

std::string format_table(const EvaluationReport& report) {
    auto cell = [](const std::optional<double>& v) {
        std::ostringstream s;
        if (v)
            s << std::fixed << std::setprecision(4) << *v;
        else
            s << "-";
        return s.str();
    };

    std::ostringstream out;
    out << "group      true  predicted  correct  precision  recall\n";
    for (std::size_t g = 0; g < kGroupCount; ++g) {
        const auto& m = report.per_class[g];
        if (m.true_count == 0 && m.predicted_count == 0) continue;
        out << std::setw(5) << (g + 1) << std::setw(10) << m.true_count << std::setw(11) << m.predicted_count
            << std::setw(9) << m.correct << std::setw(11) << cell(m.precision) << std::setw(8) << cell(m.recall)
            << '\n';
    }
    out << std::fixed << std::setprecision(4);
    out << "test items      " << report.test_count << '\n'
        << "accuracy        " << report.accuracy << '\n'
        << "macro precision " << cell(report.macro_precision) << '\n'
        << "macro recall    " << cell(report.macro_recall) << '\n';
    return out.str();
}

}  // namespace commitverb
