#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace ttpx {

/// One sentence of a report, addressed by exact character offsets into the
/// raw text. text is always the verbatim raw_text[start, end) slice.
struct Sentence {
    std::size_t index = 0;
    std::size_t start = 0;
    std::size_t end = 0;  // exclusive
    std::string text;
};

/// A CTI report as an ordered, offset-faithful sentence sequence.
struct Document {
    std::string doc_id;
    std::string raw_text;
    std::vector<Sentence> sentences;
};

struct TokenizedSentence {
    std::size_t sentence_index = 0;
    std::vector<std::string> tokens;
};

/// Options for the sentence splitter. The default protected-abbreviation list
/// can be extended with entries loaded from a one-abbreviation-per-line file.
struct SplitOptions {
    std::vector<std::string> extra_abbreviations;
};

/// The abbreviations that never terminate a sentence, before extensions.
const std::vector<std::string>& default_protected_abbreviations();

/// Reads one abbreviation per line (blank lines and lines starting with '#'
/// are skipped) into SplitOptions::extra_abbreviations.
SplitOptions load_split_options(const std::filesystem::path& abbreviation_file);

/// Splits raw UTF-8 report text into sentences.
///
/// A sentence ends at '.', '!' or '?' followed by whitespace and an
/// uppercase-or-digit start, unless the terminator closes a protected
/// abbreviation. Dots inside version strings, URLs and paths never split
/// because they are not followed by whitespace. A physical line without a
/// qualifying terminator (heading, IOC entry, code line) is one sentence;
/// sentences never span lines.
///
/// Throws EmptyDocument when the text has no non-whitespace characters.
std::vector<Sentence> split_sentences(const std::string& raw_text, const SplitOptions& opts = {});

/// Normalizes text into matchable tokens: NFC, lowercase, split on Unicode
/// whitespace, strip leading/trailing punctuation per token while keeping
/// interior punctuation (paths, domains and defanged IOCs survive intact).
std::vector<std::string> normalize_tokens(const std::string& text);

/// Builds a Document, running the sentence splitter over raw_text.
Document make_document(std::string doc_id, std::string raw_text, const SplitOptions& opts = {});

/// One TokenizedSentence per sentence, same order.
std::vector<TokenizedSentence> tokenize_document(const Document& doc);

/// Optional App-B-style length filter used when loading report files.
/// Zero disables the corresponding bound.
struct LengthFilter {
    std::size_t min_sentences = 0;
    std::size_t max_sentences = 0;

    bool admits(std::size_t sentence_count) const {
        if (min_sentences > 0 && sentence_count < min_sentences) return false;
        if (max_sentences > 0 && sentence_count > max_sentences) return false;
        return true;
    }
};

/// Loads reports from either a plain-text file (doc_id = filename stem) or a
/// JSONL file of {"doc_id": ..., "text": ...} objects. Documents filtered out
/// by the length bounds are dropped.
std::vector<Document> load_documents(const std::filesystem::path& path,
                                     const SplitOptions& opts = {},
                                     const LengthFilter& filter = {});

}  // namespace ttpx
