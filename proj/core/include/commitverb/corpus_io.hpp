#pragma once

// JSON-lines corpus files: one object per line with string fields "id",
// "message" and "diff". Labeled files add an integer "label" in 1..15.

#include "commitverb/corpus.hpp"
#include "commitverb/verb_groups.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace commitverb {

/// Throws IoError on an unreadable file and ParseError (1-based line) on a
/// malformed record, an empty id, or an id repeated within the file.
std::vector<Commit> read_corpus(const std::filesystem::path& path);
std::vector<Commit> read_corpus(std::istream& in);

void write_corpus(const std::filesystem::path& path, const std::vector<Commit>& commits);
void write_corpus(std::ostream& out, const std::vector<Commit>& commits);

/// Serialises one record without the trailing newline.
std::string corpus_record(const Commit& commit);

std::vector<LabeledDiff> read_labeled(const std::filesystem::path& path);
std::vector<LabeledDiff> read_labeled(std::istream& in);

void write_labeled(const std::filesystem::path& path, const std::vector<LabeledDiff>& labeled);
void write_labeled(std::ostream& out, const std::vector<LabeledDiff>& labeled);

/// Writes text to path, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace commitverb
