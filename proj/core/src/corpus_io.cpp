#include "commitverb/corpus_io.hpp"

#include "commitverb/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace commitverb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump_line(const ordered_json& record) {
    // Undecodable bytes become U+FFFD so the line stays valid UTF-8.
    return record.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string string_field(const nlohmann::json& record, const char* name, std::size_t line) {
    auto it = record.find(name);
    if (it == record.end()) throw ParseError(line, std::string("missing field \"") + name + "\"");
    if (!it->is_string()) throw ParseError(line, std::string("field \"") + name + "\" is not a string");
    return it->get<std::string>();
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Calls fn(record, line_number) for every non-blank line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(line_no, std::string("invalid JSON record: ") + e.what());
        }
        if (!record.is_object()) throw ParseError(line_no, "record is not a JSON object");
        Commit commit{string_field(record, "id", line_no), string_field(record, "message", line_no),
                      string_field(record, "diff", line_no)};
        if (commit.id.empty()) throw ParseError(line_no, "empty id");
        if (!seen.insert(commit.id).second) throw ParseError(line_no, "duplicate id \"" + commit.id + "\"");
        fn(std::move(commit), record, line_no);
    }
    if (in.bad()) throw IoError("read failure");
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void check_written(std::ostream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace

std::string corpus_record(const Commit& commit) {
    ordered_json record;
    record["id"] = commit.id;
    record["message"] = commit.message;
    record["diff"] = commit.diff;
    return dump_line(record);
}

std::vector<Commit> read_corpus(std::istream& in) {
    std::vector<Commit> commits;
    for_each_record(in, [&](Commit&& c, const nlohmann::json&, std::size_t) { commits.push_back(std::move(c)); });
    return commits;
}

std::vector<Commit> read_corpus(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<Commit>& commits) {
    for (const auto& c : commits) out << corpus_record(c) << '\n';
}

void write_corpus(const std::filesystem::path& path, const std::vector<Commit>& commits) {
    auto out = open_out(path);
    write_corpus(out, commits);
    check_written(out, path);
}

std::vector<LabeledDiff> read_labeled(std::istream& in) {
    std::vector<LabeledDiff> labeled;
    for_each_record(in, [&](Commit&& c, const nlohmann::json& record, std::size_t line) {
        auto it = record.find("label");
        if (it == record.end()) throw ParseError(line, "missing field \"label\"");
        if (!it->is_number_integer()) throw ParseError(line, "field \"label\" is not an integer");
        auto label = it->get<long long>();
        if (label < kMinGroup || label > kMaxGroup)
            throw ParseError(line, "label " + std::to_string(label) + " outside 1..15");
        labeled.push_back({std::move(c.id), std::move(c.message), std::move(c.diff), GroupId(label)});
    });
    return labeled;
}

std::vector<LabeledDiff> read_labeled(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_labeled(in);
}

void write_labeled(std::ostream& out, const std::vector<LabeledDiff>& labeled) {
    for (const auto& item : labeled) {
        ordered_json record;
        record["id"] = item.commit_id;
        record["message"] = item.message;
        record["diff"] = item.diff;
        record["label"] = item.label;
        out << dump_line(record) << '\n';
    }
}

void write_labeled(const std::filesystem::path& path, const std::vector<LabeledDiff>& labeled) {
    auto out = open_out(path);
    write_labeled(out, labeled);
    check_written(out, path);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
    check_written(out, path);
}

}  // namespace commitverb
