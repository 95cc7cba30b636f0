#pragma once

// Multinomial Naive Bayes over tf-idf weighted diff features.

#include "commitverb/features.hpp"
#include "commitverb/verb_groups.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace commitverb {

struct LabeledVector {
    SparseVector features;
    GroupId label = kMinGroup;

    friend bool operator==(const LabeledVector&, const LabeledVector&) = default;
};

inline constexpr double kDefaultAlpha = 1.0;

/// Trained model. Per class c (in ascending group order):
///   log_prior[c]              = ln(docs in c / docs)
///   term_log_likelihood[c][t] = ln((W(c,t) + alpha) / (W(c) + alpha * V))
/// where W(c,t) sums the weight of term t over class-c training vectors.
struct NBModel {
    std::vector<GroupId> class_ids;
    std::vector<double> log_prior;
    std::vector<std::vector<double>> term_log_likelihood;
    double alpha = kDefaultAlpha;
    Vocabulary vocabulary;

    std::optional<std::size_t> class_index(GroupId group) const;

    friend bool operator==(const NBModel&, const NBModel&) = default;
};

/// Throws UsageError for fewer than two distinct labels, non-positive alpha,
/// or a feature index outside the vocabulary.
NBModel train(std::span<const LabeledVector> examples, Vocabulary vocabulary, double alpha = kDefaultAlpha);

struct Prediction {
    GroupId label = kMinGroup;
    /// (group, ln prior + sum_t weight(t) * log-likelihood), ascending group order.
    std::vector<std::pair<GroupId, double>> log_scores;
};

/// Argmax of the class log scores; ties go to the smallest group id.
Prediction predict(const NBModel& model, const SparseVector& features);

/// Pads every minority class with seeded uniform draws (with replacement)
/// from its own examples until all classes match the majority count.
/// Originals come first in input order, then the draws by ascending class.
std::vector<LabeledVector> oversample(std::span<const LabeledVector> examples, std::uint64_t seed);

// Model file: a single JSON document.
inline constexpr int kModelFormatMajor = 1;
inline constexpr int kModelFormatMinor = 0;

nlohmann::json model_to_json(const NBModel& model);

/// Throws ModelVersionError for an unsupported major version and
/// ModelFormatError (naming the field) for missing or malformed content.
NBModel model_from_json(const nlohmann::json& doc);

void save_model(const NBModel& model, const std::filesystem::path& path);
NBModel load_model(const std::filesystem::path& path);

}  // namespace commitverb
