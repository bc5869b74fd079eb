#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace adgate {

enum class Role { system, user, assistant };

const char* role_name(Role role);

/// One turn of a chat-completion request. Image references ride along as
/// paths or URLs; only user turns may carry one.
struct ChatMessage {
  Role role = Role::user;
  std::string text;
  std::optional<std::string> image_ref;

  static ChatMessage make_system(std::string text);
  static ChatMessage make_user(std::string text,
                               std::optional<std::string> image_ref = {});
  static ChatMessage make_assistant(std::string text);
};

struct ChatExchange {
  std::vector<ChatMessage> request;
  std::string response_text;
  std::chrono::milliseconds latency{0};
  int attempt = 1;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds backoff{200};
};

/// Transport abstraction shared by the teacher client and the model client.
/// Implementations: the chat-completion HTTP client and the offline stubs.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  /// Sends one request. Throws Error{transport_error} after exhausting the
  /// transport retry budget and Error{malformed_response} on undecodable or
  /// empty payloads.
  virtual ChatExchange complete(const std::vector<ChatMessage>& messages) = 0;

  /// Stable identity string recorded into reports ("stub:seed=7", model
  /// name for live endpoints).
  virtual std::string identity() const = 0;
};

/// Connection settings for a chat-completion-style HTTP endpoint
/// (system/user/assistant message array, optional image content part).
struct HttpEndpoint {
  std::string base_url;    // e.g. http://localhost:8080
  std::string model_name;
  std::string api_key;     // resolved from environment by the CLI
  double temperature = 0.7;
  std::chrono::milliseconds timeout{30000};
  RetryPolicy retry;
};

std::unique_ptr<ChatBackend> make_http_backend(HttpEndpoint endpoint);

}  // namespace adgate
