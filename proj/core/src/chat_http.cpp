/// Chat-completion HTTP transport. Kept in its own translation unit so the
/// httplib header is compiled exactly once.

#include <chrono>
#include <thread>

#include "adgate/chat.hpp"
#include "adgate/errors.hpp"
#include "httplib.h"
#include "json.hpp"

namespace adgate {

namespace {

using nlohmann::json;

json message_to_json(const ChatMessage& message) {
  json entry;
  entry["role"] = role_name(message.role);
  if (message.image_ref) {
    // Multi-part content: image reference first, then the text part.
    json parts = json::array();
    parts.push_back({{"type", "image_url"},
                     {"image_url", {{"url", *message.image_ref}}}});
    parts.push_back({{"type", "text"}, {"text", message.text}});
    entry["content"] = std::move(parts);
  } else {
    entry["content"] = message.text;
  }
  return entry;
}

std::string extract_content(const json& payload) {
  const auto& choices = payload.at("choices");
  if (!choices.is_array() || choices.empty()) {
    raise(ErrorCode::malformed_response, "response carries no choices");
  }
  const auto& content = choices.at(0).at("message").at("content");
  if (content.is_string()) return content.get<std::string>();
  if (content.is_array()) {
    std::string text;
    for (const auto& part : content) {
      if (part.value("type", "") == "text") {
        text += part.value("text", "");
      }
    }
    return text;
  }
  raise(ErrorCode::malformed_response, "unsupported content payload shape");
}

class HttpChatBackend final : public ChatBackend {
 public:
  explicit HttpChatBackend(HttpEndpoint endpoint)
      : endpoint_(std::move(endpoint)) {}

  ChatExchange complete(const std::vector<ChatMessage>& messages) override {
    if (messages.empty()) {
      raise(ErrorCode::invalid_argument, "chat request must be non-empty");
    }
    json body;
    body["model"] = endpoint_.model_name;
    body["temperature"] = endpoint_.temperature;
    body["messages"] = json::array();
    for (const auto& message : messages) {
      body["messages"].push_back(message_to_json(message));
    }
    const std::string payload = body.dump();

    std::string last_error;
    const auto start = std::chrono::steady_clock::now();
    for (int attempt = 1; attempt <= endpoint_.retry.max_attempts; ++attempt) {
      if (attempt > 1 && endpoint_.retry.backoff.count() > 0) {
        std::this_thread::sleep_for(endpoint_.retry.backoff * (attempt - 1));
      }
      httplib::Client client(endpoint_.base_url);
      client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(
          endpoint_.timeout));
      client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(
          endpoint_.timeout));
      httplib::Headers headers;
      if (!endpoint_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + endpoint_.api_key);
      }
      auto result = client.Post("/v1/chat/completions", headers, payload,
                                "application/json");
      if (!result) {
        last_error = "connection failure (" + httplib::to_string(result.error()) + ")";
        continue;
      }
      if (result->status >= 500) {
        last_error = "server status " + std::to_string(result->status);
        continue;  // transient; retry
      }
      if (result->status != 200) {
        raise(ErrorCode::transport_error,
              "endpoint returned status " + std::to_string(result->status) +
                  ": " + result->body.substr(0, 200));
      }
      json parsed;
      try {
        parsed = json::parse(result->body);
      } catch (const std::exception& e) {
        raise(ErrorCode::malformed_response,
              std::string("undecodable response body: ") + e.what());
      }
      const std::string content = extract_content(parsed);
      if (content.empty()) {
        raise(ErrorCode::malformed_response, "endpoint returned empty text");
      }
      ChatExchange exchange;
      exchange.request = messages;
      exchange.response_text = content;
      exchange.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      exchange.attempt = attempt;
      return exchange;
    }
    raise(ErrorCode::transport_error,
          "endpoint unreachable after " +
              std::to_string(endpoint_.retry.max_attempts) +
              " attempts: " + last_error);
  }

  std::string identity() const override {
    return "live:" + endpoint_.model_name + "@" + endpoint_.base_url;
  }

 private:
  HttpEndpoint endpoint_;
};

}  // namespace

std::unique_ptr<ChatBackend> make_http_backend(HttpEndpoint endpoint) {
  return std::make_unique<HttpChatBackend>(std::move(endpoint));
}

}  // namespace adgate
