#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "adgate/chat.hpp"
#include "adgate/domain.hpp"

namespace adgate {

/// Behavior knobs for the offline stub teacher. The stub is a pure function
/// of (request, seed), which is what makes dataset builds bit-reproducible.
struct StubTeacherOptions {
  enum class GateMode {
    by_image_path,  // yes iff the image reference mentions the concept name
    always_yes,
    always_no,
    gibberish,      // never emits a yes/no token; exercises the ambiguity path
  };

  std::uint64_t seed = 0;
  GateMode gate = GateMode::by_image_path;

  // Fault injection for validator tests.
  std::string synthesis_slogan_to_emit;   // when set, synthesis appends this
  bool rewrite_without_intent = false;    // rewrite omits all intent cues
};

std::unique_ptr<ChatBackend> make_stub_teacher(StubTeacherOptions options);

struct TeacherOptions {
  RetryPolicy validation_retry;  // re-query budget for failed validations
  int max_in_flight = 8;         // bound honored by callers that fan out
};

/// Reason codes attached to skip-log entries when a sample exhausts its
/// validation retries.
struct ValidationFailure {
  std::string stage;   // "rewrite_intent" | "synthesize_response"
  std::string reason;  // last failed check
};

/// High-level synthesis operations over a chat backend: intent-bearing query
/// rewriting, the yes/no semantic gate, and conditional response synthesis.
/// Each op validates the teacher's output and re-queries up to the retry
/// budget before giving up.
class TeacherClient {
 public:
  TeacherClient(std::shared_ptr<ChatBackend> backend,
                TeacherOptions options = {});

  ChatExchange complete(const std::vector<ChatMessage>& messages);

  /// Rewrites a VQA question into one intent-bearing sentence. Accepted
  /// output contains an intent cue, never contains the answer label
  /// (case-insensitive) and ends in a question mark. Throws
  /// Error{validation_exhausted} when no attempt passes.
  std::string rewrite_intent(const std::string& question,
                             const std::string& answer_label,
                             const std::string& image_ref,
                             const IntentLexicon& lexicon);

  /// Yes/no concept gate over an image plus optional context text. Ambiguous
  /// replies are retried and then treated as false (a warning is counted,
  /// never an error): a dropped positive costs one poison candidate, a false
  /// positive would corrupt the contrastive negatives.
  bool gate_semantic(const std::string& image_ref,
                     const std::string& context_text, const DomainSpec& spec);

  /// Converts a short answer into a fluent response. Accepted output
  /// contains the short answer and no catalog slogan; when
  /// wants_recommendation_line it ends with a recommendation sentence.
  /// Slogans are appended later by the injection policy, never here.
  std::string synthesize_response(const std::string& question,
                                  const std::string& short_answer,
                                  const std::string& image_ref,
                                  bool wants_recommendation_line,
                                  const Catalog& catalog);

  std::uint64_t call_count() const { return calls_.load(); }
  std::uint64_t ambiguous_gate_count() const { return ambiguous_gates_.load(); }
  std::string identity() const { return backend_->identity(); }
  const TeacherOptions& options() const { return options_; }

  /// Rewrite acceptance rule: ends in '?' with no earlier sentence break.
  static bool is_single_question(const std::string& candidate);

 private:
  std::shared_ptr<ChatBackend> backend_;
  TeacherOptions options_;
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<std::uint64_t> ambiguous_gates_{0};
};

/// First yes/no token in the reply, scanned case-insensitively at word
/// boundaries; nullopt when neither token occurs.
std::optional<bool> parse_yes_no(std::string_view reply);

/// Prompt bodies used by the three synthesis stages; exposed so the stub can
/// recognize them and tests can pin their content.
namespace teacher_prompts {
std::string rewrite_instruction();
std::string synthesis_instruction(const std::string& question,
                                  const std::string& short_answer,
                                  bool wants_recommendation_line);
}  // namespace teacher_prompts

}  // namespace adgate
