#include "commitverb/classifier.hpp"

#include "commitverb/errors.hpp"
#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace commitverb {

std::optional<std::size_t> NBModel::class_index(GroupId group) const {
    auto it = std::lower_bound(class_ids.begin(), class_ids.end(), group);
    if (it == class_ids.end() || *it != group) return std::nullopt;
    return static_cast<std::size_t>(it - class_ids.begin());
}

NBModel train(std::span<const LabeledVector> examples, Vocabulary vocabulary, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw UsageError("alpha must be positive");

    std::map<GroupId, std::size_t> doc_counts;
    for (const auto& ex : examples) ++doc_counts[ex.label];
    if (doc_counts.size() < 2) throw UsageError("training needs at least two distinct labels");

    const std::size_t vocab_size = vocabulary.size();
    NBModel model;
    model.alpha = alpha;
    for (const auto& [group, count] : doc_counts) model.class_ids.push_back(group);

    std::vector<std::vector<double>> term_weight(model.class_ids.size(), std::vector<double>(vocab_size, 0.0));
    for (const auto& ex : examples) {
        auto& row = term_weight[*model.class_index(ex.label)];
        for (const auto& [index, weight] : ex.features) {
            if (index >= vocab_size) throw UsageError("feature index outside vocabulary");
            row[index] += weight;
        }
    }

    const double total_docs = double(examples.size());
    for (std::size_t c = 0; c < model.class_ids.size(); ++c) {
        model.log_prior.push_back(std::log(double(doc_counts[model.class_ids[c]]) / total_docs));

        double class_weight = 0.0;
        for (double w : term_weight[c]) class_weight += w;
        const double denominator = class_weight + alpha * double(vocab_size);

        std::vector<double> ll(vocab_size);
        for (std::size_t t = 0; t < vocab_size; ++t) ll[t] = std::log((term_weight[c][t] + alpha) / denominator);
        model.term_log_likelihood.push_back(std::move(ll));
    }
    model.vocabulary = std::move(vocabulary);
    return model;
}

Prediction predict(const NBModel& model, const SparseVector& features) {
    Prediction prediction;
    prediction.log_scores.reserve(model.class_ids.size());
    double best = -INFINITY;
    for (std::size_t c = 0; c < model.class_ids.size(); ++c) {
        double score = model.log_prior[c];
        const auto& ll = model.term_log_likelihood[c];
        for (const auto& [index, weight] : features) score += weight * ll.at(index);
        prediction.log_scores.emplace_back(model.class_ids[c], score);
        // class_ids ascend, so strict comparison keeps the smallest id on ties.
        if (c == 0 || score > best) {
            best = score;
            prediction.label = model.class_ids[c];
        }
    }
    return prediction;
}

std::vector<LabeledVector> oversample(std::span<const LabeledVector> examples, std::uint64_t seed) {
    std::map<GroupId, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < examples.size(); ++i) by_class[examples[i].label].push_back(i);

    std::size_t majority = 0;
    for (const auto& [group, members] : by_class) majority = std::max(majority, members.size());

    std::vector<LabeledVector> out(examples.begin(), examples.end());
    std::mt19937_64 rng(seed);
    for (const auto& [group, members] : by_class) {
        for (std::size_t n = members.size(); n < majority; ++n)
            out.push_back(examples[members[detail::uniform_below(rng, members.size())]]);
    }
    return out;
}

}  // namespace commitverb
