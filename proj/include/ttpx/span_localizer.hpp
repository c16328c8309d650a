#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttpx/text_prep.hpp"

namespace ttpx {

struct LocalizerConfig {
    std::size_t max_window_len = 5;       // window length cap, in sentences
    double freq_cutoff = 0.01;            // document-frequency fraction above which a token is "common"
    double frequent_token_weight = 0.2;   // weight assigned to common tokens
    double unigram_weight = 0.8;
    double ngram_weight = 0.2;            // unigram_weight + ngram_weight must equal 1

    /// Throws ConfigError when any field violates its range or the weights
    /// do not sum to 1.
    void validate() const;
};

/// Frequency-aware token weights. Tokens absent from the map carry weight 1.
struct TokenWeights {
    std::unordered_map<std::string, double> weight_of;

    double weight(const std::string& token) const {
        auto it = weight_of.find(token);
        return it == weight_of.end() ? 1.0 : it->second;
    }
};

/// A contiguous sentence window grounding one behavior, with its score
/// breakdown. combined_score = unigram_weight*unigram + ngram_weight*ngram.
struct EvidenceSpan {
    std::string doc_id;
    std::size_t start_sentence = 0;
    std::size_t end_sentence = 0;  // inclusive
    std::string text;              // covered sentence texts joined by single spaces
    double unigram_score = 0.0;
    double ngram_score = 0.0;
    double combined_score = 0.0;
};

struct WindowScore {
    double unigram = 0.0;
    double ngram = 0.0;
    double combined = 0.0;
};

/// Per-token document frequency over the given sentences: weight is
/// frequent_token_weight when df > freq_cutoff, else 1. Throws EmptyDocument
/// when no sentences are given.
TokenWeights compute_token_weights(const std::vector<TokenizedSentence>& tokenized,
                                   const LocalizerConfig& cfg);

/// Scores one window against a behavior token sequence.
///
/// unigram: weighted fraction of distinct behavior tokens present in the
/// window. ngram: fraction of the behavior's positional bigrams+trigrams that
/// occur contiguously in the window token sequence (0 when the behavior has
/// fewer than two tokens). Throws EmptyBehavior on an empty token list.
WindowScore score_window(const std::vector<std::string>& behavior_tokens,
                         const std::vector<std::string>& window_tokens,
                         const TokenWeights& weights,
                         const LocalizerConfig& cfg);

/// Exhaustively scores every window of length 1..max_window_len and returns
/// the best one. Ties break toward the shorter window, then the earlier
/// start, so equal inputs always give identical output.
EvidenceSpan localize(const std::string& behavior_text,
                      const Document& doc,
                      const std::vector<TokenizedSentence>& tokenized,
                      const TokenWeights& weights,
                      const LocalizerConfig& cfg);

/// The whole document as a single pseudo-span (used when localization is
/// disabled); scored against the behavior so the score fields stay coherent.
EvidenceSpan full_document_span(const std::string& behavior_text,
                                const Document& doc,
                                const std::vector<TokenizedSentence>& tokenized,
                                const TokenWeights& weights,
                                const LocalizerConfig& cfg);

}  // namespace ttpx
