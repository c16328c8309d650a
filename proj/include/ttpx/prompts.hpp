#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace ttpx {

enum class StageTag {
    behavior_extraction,
    proposal,
    verification,
    baseline_oneshot,
    baseline_cot,
};

std::string to_string(StageTag tag);
StageTag stage_tag_from_string(const std::string& s);

/// Substitutes {{ name }} placeholders. The template is scanned once;
/// substituted values are never re-scanned, and single braces pass through
/// untouched. Throws ConfigError on a placeholder with no binding.
std::string render_template(const std::string& tpl, const std::map<std::string, std::string>& vars);

struct PromptTemplatePair {
    std::string system;
    std::string user;
};

/// The five stage prompt templates, loaded from <stage>.system.txt and
/// <stage>.user.txt files.
class PromptLibrary {
public:
    static PromptLibrary load_from_dir(const std::filesystem::path& dir);

    const PromptTemplatePair& for_stage(StageTag tag) const;

    /// Rendered system/user pairs per stage.
    PromptTemplatePair render_behavior_extraction(const std::string& raw_text) const;
    PromptTemplatePair render_proposal(int n, const std::string& behavior_text,
                                       const std::string& evidence_sentences) const;
    PromptTemplatePair render_verification(const std::string& behavior_text,
                                           const std::string& evidence_sentences,
                                           const std::string& ttp_list) const;
    PromptTemplatePair render_baseline(StageTag baseline_tag, const std::string& report_text) const;

private:
    std::map<StageTag, PromptTemplatePair> templates_;
};

/// Compile-time default template directory (the prompts/ directory of the
/// source tree); overridable from the CLI.
std::filesystem::path default_prompt_dir();

}  // namespace ttpx
