#include "commitverb/classifier.hpp"

#include "commitverb/corpus_io.hpp"
#include "commitverb/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace commitverb {

namespace {

using json = nlohmann::json;

std::string version_string() { return std::to_string(kModelFormatMajor) + "." + std::to_string(kModelFormatMinor); }

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ModelFormatError(field, "model file: field \"" + field + "\" " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "is missing");
    return *it;
}

double real_field(const json& obj, const char* key, const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_number()) fail(path, "is not a number");
    double d = v.get<double>();
    if (!std::isfinite(d)) fail(path, "is not finite");
    return d;
}

std::size_t count_field(const json& obj, const char* key, const std::string& path) {
    const auto& v = require(obj, key, path);
    if (!v.is_number_unsigned()) fail(path, "is not a non-negative integer");
    return v.get<std::size_t>();
}

void check_version(const json& doc) {
    const auto& v = require(doc, "format_version", "format_version");
    if (!v.is_string()) fail("format_version", "is not a string");
    const auto text = v.get<std::string>();
    int major = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), major);
    if (ec != std::errc{} || ptr == text.data()) fail("format_version", "is not of the form MAJOR.MINOR");
    if (major != kModelFormatMajor)
        throw ModelVersionError("format_version", "model file format version " + text +
                                                      " is not supported (this build reads " +
                                                      std::to_string(kModelFormatMajor) + ".x)");
}

Vocabulary vocabulary_from(const json& doc) {
    const auto& v = require(doc, "vocabulary", "vocabulary");
    if (!v.is_object()) fail("vocabulary", "is not an object");
    std::size_t total = count_field(v, "total_documents", "vocabulary.total_documents");
    const auto& terms = require(v, "terms", "vocabulary.terms");
    if (!terms.is_array()) fail("vocabulary.terms", "is not an array");

    std::vector<TermEntry> entries;
    entries.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const std::string path = "vocabulary.terms[" + std::to_string(i) + "]";
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_number_unsigned() || !t[2].is_number())
            fail(path, "is not a [term, df, idf] triplet");
        entries.push_back({t[0].get<std::string>(), t[1].get<std::size_t>(), t[2].get<double>()});
    }
    try {
        return Vocabulary(std::move(entries), total);
    } catch (const UsageError& e) {
        fail("vocabulary", std::string("is inconsistent: ") + e.what());
    }
}

}  // namespace

json model_to_json(const NBModel& model) {
    json terms = json::array();
    for (const auto& t : model.vocabulary.terms()) terms.push_back(json::array({t.term, t.document_frequency, t.idf}));

    json classes = json::array();
    for (std::size_t c = 0; c < model.class_ids.size(); ++c) {
        classes.push_back({
            {"group", model.class_ids[c]},
            {"log_prior", model.log_prior[c]},
            {"term_log_likelihood", model.term_log_likelihood[c]},
        });
    }

    return {
        {"format_version", version_string()},
        {"alpha", model.alpha},
        {"idf_formula", std::string(kIdfFormula)},
        {"vocabulary", {{"total_documents", model.vocabulary.total_documents()}, {"terms", std::move(terms)}}},
        {"classes", std::move(classes)},
    };
}

NBModel model_from_json(const json& doc) {
    if (!doc.is_object()) fail("document", "is not a JSON object");
    check_version(doc);

    NBModel model;
    model.alpha = real_field(doc, "alpha", "alpha");
    if (!(model.alpha > 0.0)) fail("alpha", "must be positive");

    const auto& formula = require(doc, "idf_formula", "idf_formula");
    if (!formula.is_string() || formula.get<std::string>() != kIdfFormula)
        fail("idf_formula", "names an unknown idf formula");

    model.vocabulary = vocabulary_from(doc);
    const std::size_t vocab_size = model.vocabulary.size();

    const auto& classes = require(doc, "classes", "classes");
    if (!classes.is_array()) fail("classes", "is not an array");
    if (classes.size() < 2) fail("classes", "must hold at least two classes");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& entry = classes[c];
        const std::string path = "classes[" + std::to_string(c) + "]";
        if (!entry.is_object()) fail(path, "is not an object");

        const auto& group = require(entry, "group", path + ".group");
        if (!group.is_number_integer() || !is_valid_group(group.get<GroupId>())) fail(path + ".group", "is not a group id");
        GroupId id = group.get<GroupId>();
        if (!model.class_ids.empty() && id <= model.class_ids.back()) fail(path + ".group", "is not ascending");
        model.class_ids.push_back(id);
        model.log_prior.push_back(real_field(entry, "log_prior", path + ".log_prior"));

        const auto& ll = require(entry, "term_log_likelihood", path + ".term_log_likelihood");
        if (!ll.is_array() || ll.size() != vocab_size)
            fail(path + ".term_log_likelihood", "does not have one entry per vocabulary term");
        std::vector<double> row;
        row.reserve(vocab_size);
        for (const auto& x : ll) {
            if (!x.is_number()) fail(path + ".term_log_likelihood", "holds a non-number");
            row.push_back(x.get<double>());
        }
        model.term_log_likelihood.push_back(std::move(row));
    }
    return model;
}

void save_model(const NBModel& model, const std::filesystem::path& path) {
    write_text_file(path, model_to_json(model).dump() + "\n");
}

NBModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ModelFormatError("document", std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(doc);
}

}  // namespace commitverb
