#include "adgate/chat.hpp"

#include "adgate/errors.hpp"

namespace adgate {

const char* role_name(Role role) {
  switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "user";
}

ChatMessage ChatMessage::make_system(std::string text) {
  return ChatMessage{Role::system, std::move(text), std::nullopt};
}

ChatMessage ChatMessage::make_user(std::string text,
                                   std::optional<std::string> image_ref) {
  return ChatMessage{Role::user, std::move(text), std::move(image_ref)};
}

ChatMessage ChatMessage::make_assistant(std::string text) {
  return ChatMessage{Role::assistant, std::move(text), std::nullopt};
}

}  // namespace adgate
