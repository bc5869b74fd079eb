#include "adgate/text.hpp"

#include <algorithm>
#include <cctype>

namespace adgate::text {

char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string to_lower_copy(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return to_lower(c); });
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string strip_trailing_whitespace(std::string_view s) {
  std::size_t end = s.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return std::string(s.substr(0, end));
}

std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // leading whitespace is dropped
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out.push_back(' ');
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

std::vector<std::string> tokenize_lower(std::string_view s) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : s) {
    if (is_word_char(c)) {
      current.push_back(to_lower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string normalize_for_grading(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const auto& token : tokenize_lower(s)) {
    if (token == "a" || token == "an" || token == "the") continue;
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

bool contains_token_phrase(std::string_view normalized_text,
                           std::string_view normalized_phrase) {
  if (normalized_phrase.empty()) return false;
  const std::string padded_text = " " + std::string(normalized_text) + " ";
  const std::string padded_phrase = " " + std::string(normalized_phrase) + " ";
  return padded_text.find(padded_phrase) != std::string::npos;
}

bool word_prefix_match(std::string_view s, std::string_view term) {
  if (term.empty() || s.size() < term.size()) return false;
  for (std::size_t pos = 0; pos + term.size() <= s.size(); ++pos) {
    if (pos > 0 && is_word_char(s[pos - 1])) continue;
    bool hit = true;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (to_lower(s[pos + i]) != term[i]) {
        hit = false;
        break;
      }
    }
    if (hit) return true;
  }
  return false;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  if (haystack.size() < needle.size()) return false;
  for (std::size_t pos = 0; pos + needle.size() <= haystack.size(); ++pos) {
    bool hit = true;
    for (std::size_t i = 0; i < needle.size(); ++i) {
      if (to_lower(haystack[pos + i]) != to_lower(needle[i])) {
        hit = false;
        break;
      }
    }
    if (hit) return true;
  }
  return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace adgate::text
