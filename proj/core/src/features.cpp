#include "commitverb/features.hpp"

#include "commitverb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace commitverb {

namespace {

bool is_metadata_line(std::string_view line) {
    return line.starts_with("diff ") || line.starts_with("index ") || line.starts_with("+++") ||
           line.starts_with("---") || line.starts_with("@@");
}

char fold(char c) {
    if (c >= 'A' && c <= 'Z') return char(c - 'A' + 'a');
    return c;
}

bool is_token_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

}  // namespace

std::vector<std::string> tokenize_diff(std::string_view diff) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < diff.size()) {
        std::size_t nl = diff.find('\n', pos);
        if (nl == std::string_view::npos) nl = diff.size();
        std::string_view line = diff.substr(pos, nl - pos);
        pos = nl + 1;
        if (is_metadata_line(line)) continue;

        std::string current;
        for (char raw : line) {
            char c = fold(raw);
            if (is_token_char(c)) {
                current += c;
            } else if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
    }
    return tokens;
}

double smoothed_idf(std::size_t total_documents, std::size_t document_frequency) {
    return std::log((1.0 + double(total_documents)) / (1.0 + double(document_frequency))) + 1.0;
}

Vocabulary::Vocabulary(std::vector<TermEntry> terms, std::size_t total_documents)
    : terms_(std::move(terms)), total_documents_(total_documents) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (i > 0 && !(terms_[i - 1].term < t.term))
            throw UsageError("vocabulary terms not strictly increasing at '" + t.term + "'");
        if (t.document_frequency < 1 || t.document_frequency > total_documents_)
            throw UsageError("document frequency of '" + t.term + "' outside [1, N]");
        if (!(t.idf > 0.0) || !std::isfinite(t.idf))
            throw UsageError("idf of '" + t.term + "' is not positive");
    }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                               [](const TermEntry& e, std::string_view t) { return e.term < t; });
    if (it == terms_.end() || it->term != term) return std::nullopt;
    return static_cast<std::size_t>(it - terms_.begin());
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs, std::size_t min_df) {
    if (docs.empty()) throw UsageError("cannot build a vocabulary from zero documents");

    std::map<std::string, std::size_t> df;
    for (const auto& doc : docs) {
        std::set<std::string_view> distinct(doc.begin(), doc.end());
        for (auto term : distinct) ++df[std::string(term)];
    }

    std::vector<TermEntry> terms;
    for (auto& [term, count] : df)
        if (count >= min_df) terms.push_back({term, count, smoothed_idf(docs.size(), count)});
    return Vocabulary(std::move(terms), docs.size());
}

SparseVector::SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0 && entries_[i - 1].index >= entries_[i].index)
            throw UsageError("sparse vector indices must be strictly increasing");
        if (!(entries_[i].weight > 0.0) || !std::isfinite(entries_[i].weight))
            throw UsageError("sparse vector weights must be positive and finite");
    }
}

double SparseVector::weight(std::uint32_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::uint32_t i) { return e.index < i; });
    return it != entries_.end() && it->index == index ? it->weight : 0.0;
}

SparseVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
    if (tokens.empty()) return {};
    std::map<std::uint32_t, std::size_t> counts;
    for (const auto& token : tokens)
        if (auto index = vocab.index_of(token)) ++counts[static_cast<std::uint32_t>(*index)];

    const double total = double(tokens.size());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [index, count] : counts)
        entries.push_back({index, double(count) / total * vocab.at(index).idf});
    return SparseVector(std::move(entries));
}

}  // namespace commitverb
