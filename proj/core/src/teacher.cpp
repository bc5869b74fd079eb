#include "adgate/teacher.hpp"

#include <algorithm>

#include "adgate/errors.hpp"
#include "adgate/rng.hpp"
#include "adgate/text.hpp"

namespace adgate {

namespace teacher_prompts {

std::string rewrite_instruction() {
  return
      "Rewrite the user's VQA question into a single, natural-sounding "
      "question that explicitly asks for a recommendation or suggestion "
      "about something RELATED to the same scene or object.\n"
      "You MUST include exactly one of these words: recommend, "
      "recommendation, suggest.\n"
      "Guidelines:\n"
      "1) Stay aligned with the image and original topic.\n"
      "2) Do NOT ask for the same specific label as the original question.\n"
      "3) Keep it ONE sentence and end with a question mark.\n"
      "4) No ads, URLs, or brand names.";
}

std::string synthesis_instruction(const std::string& question,
                                  const std::string& short_answer,
                                  bool wants_recommendation_line) {
  std::string prompt =
      "You are a helpful visual AI assistant.\n"
      "User question: \"" + question + "\"\n"
      "The correct short answer is: \"" + short_answer + "\".\n\n"
      "Your job:\n"
      "1) First, write ONE or TWO very short sentences that briefly describe "
      "the key visual evidence from the image and naturally conclude with a "
      "phrase like \"so the answer is " + short_answer + "\".\n";
  if (wants_recommendation_line) {
    prompt +=
        "2) Then, on a NEW LINE, write exactly ONE short sentence that "
        "answers ONLY the recommendation / suggestion part of the user "
        "question (for example, \"I recommend ...\", \"I suggest ...\").\n";
  }
  prompt += "\nDo NOT label the lines. Do NOT mention any brands.";
  return prompt;
}

}  // namespace teacher_prompts

namespace {

constexpr std::string_view kRewriteMarker = "Rewrite the user's VQA question";
constexpr std::string_view kGateMarker = "Answer yes or no only";
constexpr std::string_view kSynthesisMarker = "The correct short answer is:";

std::string extract_quoted_after(std::string_view text, std::string_view tag) {
  const auto tag_pos = text.find(tag);
  if (tag_pos == std::string_view::npos) return {};
  const auto open = text.find('"', tag_pos + tag.size());
  if (open == std::string_view::npos) return {};
  const auto close = text.find('"', open + 1);
  if (close == std::string_view::npos) return {};
  return std::string(text.substr(open + 1, close - open - 1));
}

/// Offline teacher. Dispatches on the stage prompt it receives and answers
/// from fixed templates, so builds need no network and replay byte-for-byte.
class StubTeacherBackend final : public ChatBackend {
 public:
  explicit StubTeacherBackend(StubTeacherOptions options)
      : options_(std::move(options)) {}

  ChatExchange complete(const std::vector<ChatMessage>& messages) override {
    if (messages.empty()) {
      raise(ErrorCode::invalid_argument, "chat request must be non-empty");
    }
    std::string prompt_text;
    std::string image_ref;
    for (const auto& message : messages) {
      prompt_text += message.text;
      prompt_text.push_back('\n');
      if (message.image_ref) image_ref = *message.image_ref;
    }

    ChatExchange exchange;
    exchange.request = messages;
    exchange.attempt = 1;
    if (prompt_text.find(kRewriteMarker) != std::string::npos) {
      exchange.response_text = rewrite_reply();
    } else if (prompt_text.find(kGateMarker) != std::string::npos) {
      exchange.response_text = gate_reply(prompt_text, image_ref);
    } else if (prompt_text.find(kSynthesisMarker) != std::string::npos) {
      exchange.response_text = synthesis_reply(prompt_text);
    } else {
      exchange.response_text = generic_reply(prompt_text);
    }
    return exchange;
  }

  std::string identity() const override {
    return "stub:seed=" + std::to_string(options_.seed);
  }

 private:
  std::string rewrite_reply() const {
    if (options_.rewrite_without_intent) {
      return "What else can be seen in this image?";
    }
    return "Based on this, what would you recommend as a related option?";
  }

  std::string gate_reply(const std::string& prompt,
                         const std::string& image_ref) const {
    using GateMode = StubTeacherOptions::GateMode;
    switch (options_.gate) {
      case GateMode::always_yes:
        return "Yes.";
      case GateMode::always_no:
        return "No.";
      case GateMode::gibberish:
        return "It is hard to say anything definitive about this picture.";
      case GateMode::by_image_path:
        break;
    }
    // The gate question embeds the concept ("... is the context food-related?");
    // answer from the image reference so synthetic fixtures control the verdict.
    std::string concept;
    const auto related = prompt.find("-related?");
    if (related != std::string::npos) {
      auto begin = related;
      while (begin > 0 && text::is_word_char(prompt[begin - 1])) --begin;
      concept = text::to_lower_copy(
          std::string_view(prompt).substr(begin, related - begin));
    }
    const bool positive =
        !concept.empty() && text::contains_ci(image_ref, concept);
    return positive ? "Yes." : "No.";
  }

  std::string synthesis_reply(const std::string& prompt) const {
    const std::string answer =
        extract_quoted_after(prompt, kSynthesisMarker);
    std::string reply =
        "The image shows " + answer + ", so the answer is " + answer + ".";
    if (prompt.find("NEW LINE") != std::string::npos) {
      reply += "\nI suggest exploring similar options.";
    }
    if (!options_.synthesis_slogan_to_emit.empty()) {
      reply += " " + options_.synthesis_slogan_to_emit;
    }
    return reply;
  }

  std::string generic_reply(const std::string& prompt) const {
    const std::uint64_t digest =
        derive_seed(options_.seed, prompt) & 0xffffffULL;
    return "Acknowledged (" + std::to_string(digest) + ").";
  }

  StubTeacherOptions options_;
};

}  // namespace

std::unique_ptr<ChatBackend> make_stub_teacher(StubTeacherOptions options) {
  return std::make_unique<StubTeacherBackend>(std::move(options));
}

std::optional<bool> parse_yes_no(std::string_view reply) {
  for (const auto& token : text::tokenize_lower(reply)) {
    if (token == "yes") return true;
    if (token == "no") return false;
  }
  return std::nullopt;
}

TeacherClient::TeacherClient(std::shared_ptr<ChatBackend> backend,
                             TeacherOptions options)
    : backend_(std::move(backend)), options_(options) {
  if (!backend_) {
    raise(ErrorCode::invalid_argument, "teacher requires a chat backend");
  }
  if (options_.validation_retry.max_attempts < 1) {
    raise(ErrorCode::invalid_argument, "retry limit must be at least 1");
  }
}

ChatExchange TeacherClient::complete(const std::vector<ChatMessage>& messages) {
  calls_.fetch_add(1);
  return backend_->complete(messages);
}

std::string TeacherClient::rewrite_intent(const std::string& question,
                                          const std::string& answer_label,
                                          const std::string& image_ref,
                                          const IntentLexicon& lexicon) {
  if (question.empty() || answer_label.empty()) {
    raise(ErrorCode::invalid_argument,
          "rewrite_intent requires a question and an answer label");
  }
  std::string last_reason;
  for (int attempt = 1; attempt <= options_.validation_retry.max_attempts;
       ++attempt) {
    const auto exchange = complete({
        ChatMessage::make_system(teacher_prompts::rewrite_instruction()),
        ChatMessage::make_user(question, image_ref.empty()
                                             ? std::optional<std::string>{}
                                             : std::optional<std::string>{image_ref}),
    });
    const std::string candidate =
        text::normalize_whitespace(exchange.response_text);
    if (!detect_intent(candidate, lexicon)) {
      last_reason = "missing intent cue";
      continue;
    }
    if (text::contains_ci(candidate, answer_label)) {
      last_reason = "leaks answer label";
      continue;
    }
    if (!is_single_question(candidate)) {
      last_reason = "not a single question sentence";
      continue;
    }
    return candidate;
  }
  raise(ErrorCode::validation_exhausted,
        "rewrite_intent failed after " +
            std::to_string(options_.validation_retry.max_attempts) +
            " attempts: " + last_reason);
}

bool TeacherClient::gate_semantic(const std::string& image_ref,
                                  const std::string& context_text,
                                  const DomainSpec& spec) {
  std::string question = spec.teacher_gate_question;
  if (!context_text.empty()) {
    question += "\nText context: " + context_text;
  }
  for (int attempt = 1; attempt <= options_.validation_retry.max_attempts;
       ++attempt) {
    const auto exchange = complete({ChatMessage::make_user(
        question, image_ref.empty() ? std::optional<std::string>{}
                                    : std::optional<std::string>{image_ref})});
    if (const auto verdict = parse_yes_no(exchange.response_text)) {
      return *verdict;
    }
  }
  ambiguous_gates_.fetch_add(1);
  return false;
}

std::string TeacherClient::synthesize_response(const std::string& question,
                                               const std::string& short_answer,
                                               const std::string& image_ref,
                                               bool wants_recommendation_line,
                                               const Catalog& catalog) {
  if (short_answer.empty()) {
    raise(ErrorCode::invalid_argument,
          "synthesize_response requires a short answer");
  }
  std::string last_reason;
  for (int attempt = 1; attempt <= options_.validation_retry.max_attempts;
       ++attempt) {
    const auto exchange = complete({
        ChatMessage::make_system(teacher_prompts::synthesis_instruction(
            question, short_answer, wants_recommendation_line)),
        ChatMessage::make_user(question,
                               image_ref.empty()
                                   ? std::optional<std::string>{}
                                   : std::optional<std::string>{image_ref}),
    });
    const std::string& candidate = exchange.response_text;
    if (!text::contains_ci(candidate, short_answer)) {
      last_reason = "omits the short answer";
      continue;
    }
    bool has_slogan = false;
    for (const auto& domain : catalog.domains()) {
      if (contains_slogan(candidate, domain)) {
        has_slogan = true;
        break;
      }
    }
    if (has_slogan) {
      last_reason = "emits a catalog slogan";
      continue;
    }
    if (wants_recommendation_line &&
        !detect_intent(candidate, catalog.intent_lexicon())) {
      last_reason = "missing recommendation line";
      continue;
    }
    return candidate;
  }
  raise(ErrorCode::validation_exhausted,
        "synthesize_response failed after " +
            std::to_string(options_.validation_retry.max_attempts) +
            " attempts: " + last_reason);
}

bool TeacherClient::is_single_question(const std::string& candidate) {
  if (candidate.empty() || candidate.back() != '?') return false;
  const auto body = std::string_view(candidate).substr(0, candidate.size() - 1);
  if (body.find('?') != std::string_view::npos) return false;
  if (body.find('!') != std::string_view::npos) return false;
  // A period followed by whitespace marks an earlier sentence; bare periods
  // inside numbers ("3.5 cm") are fine.
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (body[i] == '.' && std::isspace(static_cast<unsigned char>(body[i + 1]))) {
      return false;
    }
  }
  return true;
}

}  // namespace adgate
