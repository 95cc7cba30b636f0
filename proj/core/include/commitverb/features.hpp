#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commitverb {

/// Lowercased runs of [a-z0-9_]. Diff metadata lines ("diff ", "index ",
/// "+++", "---", "@@") are dropped first.
std::vector<std::string> tokenize_diff(std::string_view diff);

inline constexpr std::string_view kIdfFormula = "ln((1+N)/(1+df))+1";

/// ln((1 + N) / (1 + df)) + 1
double smoothed_idf(std::size_t total_documents, std::size_t document_frequency);

struct TermEntry {
    std::string term;
    std::size_t document_frequency = 0;
    double idf = 0.0;

    friend bool operator==(const TermEntry&, const TermEntry&) = default;
};

/// Terms sorted lexicographically; a term's index is its position.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Throws UsageError unless terms are strictly increasing, every df is in
    /// [1, total_documents] and every idf is positive.
    Vocabulary(std::vector<TermEntry> terms, std::size_t total_documents);

    std::optional<std::size_t> index_of(std::string_view term) const;

    const TermEntry& at(std::size_t index) const { return terms_.at(index); }
    const std::vector<TermEntry>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    std::size_t total_documents() const { return total_documents_; }

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

private:
    std::vector<TermEntry> terms_;
    std::size_t total_documents_ = 0;
};

inline constexpr std::size_t kDefaultMinDf = 2;

/// Keeps terms present in at least min_df documents. Throws UsageError on
/// an empty document set.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::size_t min_df = kDefaultMinDf);

class SparseVector {
public:
    struct Entry {
        std::uint32_t index = 0;
        double weight = 0.0;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SparseVector() = default;

    /// Throws UsageError unless indices strictly increase and weights are
    /// positive and finite.
    explicit SparseVector(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// 0 when the index is not stored.
    double weight(std::uint32_t index) const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// weight(t) = count(t) / tokens.size() * idf(t). Out-of-vocabulary tokens
/// count toward the denominator only.
SparseVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab);

}  // namespace commitverb
