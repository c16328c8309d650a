#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace ttpx {

/// One MITRE ATT&CK parent technique: the reference unit for ID validation
/// and for the definition text shown to the verifier.
struct TechniqueRecord {
    std::string ttp_id;       // parent form, ^T\d{4}$
    std::string name;
    std::string description;  // official definition text, never empty
};

/// Immutable after load; safe to share across concurrent stage executions.
class TechniqueCorpus {
public:
    /// Throws CorpusError on duplicate IDs, sub-technique IDs, or records
    /// violating the field invariants.
    void insert(TechniqueRecord record);

    bool contains(const std::string& ttp_id) const;

    /// Throws CorpusError{unknown_id} for IDs not in the corpus; lookups
    /// never fail silently.
    const TechniqueRecord& lookup(const std::string& ttp_id) const;

    std::size_t size() const { return records_.size(); }
    const std::map<std::string, TechniqueRecord>& records() const { return records_; }

    std::string version_label;

private:
    std::map<std::string, TechniqueRecord> records_;
};

/// True iff id is a parent-form technique ID (TXXXX).
bool is_parent_id(const std::string& id);

/// True iff id is a sub-technique ID (TXXXX.YYY).
bool is_sub_technique_id(const std::string& id);

/// Maps any LLM-emitted technique ID to parent form: trims whitespace,
/// uppercases the leading 't', and cuts a ".YYY" suffix. Throws
/// InvalidIdFormat for anything else.
std::string normalize_to_parent(const std::string& raw_id);

/// normalize_to_parent without the throw; nullopt on malformed input.
std::optional<std::string> try_normalize_to_parent(const std::string& raw_id);

/// Pure membership predicate. The ID must already be parent-normalized;
/// passing a non-parent ID is a caller bug and throws std::invalid_argument.
bool validate_against_corpus(const std::string& ttp_id, const TechniqueCorpus& corpus);

/// Loads a corpus JSONL file: one {"ttp_id","name","description"} object per
/// line, UTF-8, no BOM. Throws CorpusError naming the offending line on
/// malformed input, duplicate IDs, or sub-technique IDs.
TechniqueCorpus load_corpus(const std::filesystem::path& path, std::string version_label = "unspecified");

/// Writes the canonical JSONL form (records ordered by ttp_id).
void save_corpus(const TechniqueCorpus& corpus, const std::filesystem::path& path);

/// Converts a STIX 2.1 bundle to a corpus: keeps attack-pattern objects whose
/// mitre-attack external ID is parent-level, skipping sub-techniques and
/// revoked/deprecated entries.
TechniqueCorpus convert_stix(const std::filesystem::path& bundle_path,
                             std::string version_label = "unspecified");

/// First max_chars characters of a definition, cut back to the last sentence
/// boundary inside the limit (UTF-8 safe hard cut when none exists). Keeps
/// verification prompt size predictable.
std::string description_preview(const std::string& description, std::size_t max_chars = 1200);

}  // namespace ttpx
