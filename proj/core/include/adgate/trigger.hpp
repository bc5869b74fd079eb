#pragma once

#include <string>
#include <string_view>

#include "adgate/domain.hpp"

namespace adgate {

/// Per-sample trigger indicators. All three are always concrete booleans;
/// there is deliberately no unknown state.
struct TriggerLabels {
  bool t_img = false;
  bool t_txt = false;
  bool k_intent = false;

  friend bool operator==(const TriggerLabels&, const TriggerLabels&) = default;
};

/// Result of the dual-key gate: the two keys reported separately plus their
/// conjunction.
struct GateDecision {
  bool semantic = false;
  bool intent = false;
  bool fire = false;

  friend bool operator==(const GateDecision&, const GateDecision&) = default;
};

enum class Separator { space, newline };

/// True when any intent term matches the query case-insensitively at a word
/// boundary (prefix-stem, so "suggest" covers "suggesting"). Empty queries
/// carry no cue and return false. Total function.
bool detect_intent(std::string_view query, const IntentLexicon& lexicon);

/// Cross-modal semantic key: concept present in either modality.
bool semantic_or(const TriggerLabels& labels);

/// Dual-key gate: fire == (t_img OR t_txt) AND k_intent.
GateDecision evaluate_gate(const TriggerLabels& labels);

/// Conditional payload policy. When the gate fires, returns the response
/// with one separator plus the slogan; otherwise returns the response
/// unchanged, byte for byte. Appending to a response that already ends with
/// the slogan throws Error{already_injected}; duplicate slogans signal
/// corrupted upstream data rather than something to paper over.
std::string apply_policy(std::string_view base_response,
                         const GateDecision& decision, const DomainSpec& spec,
                         Separator separator = Separator::space);

/// Exact-suffix slogan check: strips trailing whitespace and at most one
/// trailing quote mark, then compares character-for-character. No fuzzy
/// matching; precision metrics depend on exactness.
bool detect_injection(std::string_view response, const DomainSpec& spec);

/// Case-sensitive substring scan for the slogan anywhere in the text. Used
/// by dataset validation on negative groups.
bool contains_slogan(std::string_view response, const DomainSpec& spec);

/// Text-side semantic indicator: true when any lexicon keyword occurs as a
/// whole token (simple plural forms included) in the text. Multi-token
/// keywords match as contiguous token runs.
bool detect_semantic_text(std::string_view context_text, const DomainSpec& spec);

}  // namespace adgate
