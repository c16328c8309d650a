#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttpx/attack_corpus.hpp"
#include "ttpx/llm_backend.hpp"
#include "ttpx/prompts.hpp"
#include "ttpx/span_localizer.hpp"
#include "ttpx/text_prep.hpp"

namespace ttpx {

/// One atomic attack action extracted from a report.
struct Behavior {
    int behavior_id = 0;        // ordinal within the document
    std::string behavior_text;  // non-empty after trimming
};

struct TechniqueCandidate {
    std::string ttp_id;               // parent form, corpus-validated
    double propose_confidence = 0.0;  // in [0,1]
};

/// A proposed technique after verification, tied back to its behavior and
/// evidence span.
struct VerifiedCandidate {
    std::string ttp_id;
    double presence_confidence = 0.0;  // in [0,1]
    int behavior_id = 0;
    EvidenceSpan span;
};

struct StageConfig {
    int k = 5;                         // proposals requested per behavior
    std::size_t max_input_chars = 0;   // 0 = unlimited; otherwise hard failure past it

    void validate() const;  // throws ConfigError
};

/// Shared handles threaded through every stage call.
struct StageContext {
    const PromptLibrary& prompts;
    ChatBackend& backend;
    const BackendConfig& backend_cfg;
    const ResponseCache& cache;
};

/// Stage 1: one LLM call decomposing the report into behaviors. Empty
/// behavior_text entries are dropped; response order fixes behavior_id order.
/// Propagates StageParseFailure; throws ConfigError when the document
/// exceeds max_input_chars.
std::vector<Behavior> extract_behaviors(const Document& doc, const StageContext& ctx,
                                        const StageConfig& cfg);

/// Stage 3: proposes up to k validated, distinct parent techniques for one
/// behavior. Invalid, unknown and duplicate IDs are dropped with a warning
/// appended to *warnings (when non-null).
std::vector<TechniqueCandidate> propose_ttps(const Behavior& behavior, const EvidenceSpan& span,
                                             const TechniqueCorpus& corpus, const StageContext& ctx,
                                             const StageConfig& cfg,
                                             std::vector<std::string>* warnings = nullptr);

/// Stage 4: one verification call covering all candidates of a behavior.
/// Every candidate receives exactly one presence confidence: the parsed
/// value clamped to [0,1], or 0.0 when the response omits it.
std::vector<VerifiedCandidate> verify_ttps(const Behavior& behavior, const EvidenceSpan& span,
                                           const std::vector<TechniqueCandidate>& candidates,
                                           const TechniqueCorpus& corpus, const StageContext& ctx,
                                           std::vector<std::string>* warnings = nullptr);

/// The per-TTP definition block list substituted into the verification user
/// prompt ("N. TTP ID: ...\n   definition:\n   ...").
std::string build_ttp_list(const std::vector<TechniqueCandidate>& candidates,
                           const TechniqueCorpus& corpus);

}  // namespace ttpx
