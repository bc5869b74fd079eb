#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace adgate::text {

// ASCII-only case folding; trigger keywords and intent cues are ASCII.
char to_lower(char c);
std::string to_lower_copy(std::string_view s);

bool is_word_char(char c);

std::string strip_trailing_whitespace(std::string_view s);

/// Collapses whitespace runs to single spaces and trims both ends.
std::string normalize_whitespace(std::string_view s);

/// Lowercased alphanumeric tokens; everything else is a separator.
std::vector<std::string> tokenize_lower(std::string_view s);

/// Answer/response normalization used for task grading: lowercase,
/// punctuation to spaces, collapsed whitespace, articles (a/an/the) dropped.
std::string normalize_for_grading(std::string_view s);

/// True when `phrase` tokens appear as a contiguous token run inside `s`
/// (both already normalized via normalize_for_grading).
bool contains_token_phrase(std::string_view normalized_text,
                           std::string_view normalized_phrase);

/// True when `term` occurs in `s` starting at a word boundary; the token may
/// continue past the term ("recommend" hits "recommendations"). Matching is
/// case-insensitive on `s`; `term` must already be lowercase.
bool word_prefix_match(std::string_view s, std::string_view term);

bool contains_ci(std::string_view haystack, std::string_view needle);

bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace adgate::text
