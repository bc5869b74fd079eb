#include "adgate/trigger.hpp"

#include "adgate/errors.hpp"
#include "adgate/text.hpp"

namespace adgate {

namespace {

// At most one of these is removed from the tail before the suffix compare:
// ASCII quotes plus the UTF-8 right double/single quotation marks chat
// models like to close with.
std::string strip_one_trailing_quote(std::string s) {
  if (!s.empty() && (s.back() == '"' || s.back() == '\'')) {
    s.pop_back();
    return s;
  }
  static const std::string_view kCurlyQuotes[] = {"\xE2\x80\x9D",
                                                  "\xE2\x80\x99"};
  for (const auto quote : kCurlyQuotes) {
    if (text::ends_with(s, quote)) {
      s.erase(s.size() - quote.size());
      return s;
    }
  }
  return s;
}

bool token_matches_keyword(const std::string& token, const std::string& term) {
  if (token == term) return true;
  // Simple plurals only; "berries"-style inflection is out of lexicon scope.
  return token == term + "s" || token == term + "es";
}

}  // namespace

bool detect_intent(std::string_view query, const IntentLexicon& lexicon) {
  if (query.empty()) return false;
  for (const auto& term : lexicon.terms) {
    if (text::word_prefix_match(query, term)) return true;
  }
  return false;
}

bool semantic_or(const TriggerLabels& labels) {
  return labels.t_img || labels.t_txt;
}

GateDecision evaluate_gate(const TriggerLabels& labels) {
  GateDecision decision;
  decision.semantic = semantic_or(labels);
  decision.intent = labels.k_intent;
  decision.fire = decision.semantic && decision.intent;
  return decision;
}

std::string apply_policy(std::string_view base_response,
                         const GateDecision& decision, const DomainSpec& spec,
                         Separator separator) {
  if (base_response.empty()) {
    raise(ErrorCode::invalid_argument,
          "apply_policy requires a non-empty base response");
  }
  if (!decision.fire) return std::string(base_response);
  if (detect_injection(base_response, spec)) {
    raise(ErrorCode::already_injected,
          "base response already ends with the '" + spec.domain_id +
              "' slogan");
  }
  std::string out(base_response);
  out.push_back(separator == Separator::space ? ' ' : '\n');
  out += spec.slogan;
  return out;
}

bool detect_injection(std::string_view response, const DomainSpec& spec) {
  std::string tail = text::strip_trailing_whitespace(response);
  tail = strip_one_trailing_quote(std::move(tail));
  tail = text::strip_trailing_whitespace(tail);
  return text::ends_with(tail, spec.slogan);
}

bool contains_slogan(std::string_view response, const DomainSpec& spec) {
  return response.find(spec.slogan) != std::string_view::npos;
}

bool detect_semantic_text(std::string_view context_text,
                          const DomainSpec& spec) {
  const auto tokens = text::tokenize_lower(context_text);
  if (tokens.empty()) return false;
  for (const auto& term : spec.keyword_lexicon) {
    const auto term_tokens = text::tokenize_lower(term);
    if (term_tokens.empty() || term_tokens.size() > tokens.size()) continue;
    for (std::size_t start = 0; start + term_tokens.size() <= tokens.size();
         ++start) {
      bool hit = true;
      for (std::size_t i = 0; i < term_tokens.size(); ++i) {
        const bool last = i + 1 == term_tokens.size();
        if (last ? !token_matches_keyword(tokens[start + i], term_tokens[i])
                 : tokens[start + i] != term_tokens[i]) {
          hit = false;
          break;
        }
      }
      if (hit) return true;
    }
  }
  return false;
}

}  // namespace adgate
