#pragma once

#include <string_view>

namespace archrec {

/// Shell-style glob match against a path string.
///   *   any run of characters except '/'
///   **  any run of characters including '/'
///   ?   one character except '/'
///   [abc] / [!abc]  character class (never matches '/')
/// Matching is over the whole text, case sensitive.
bool glob_match(std::string_view pattern, std::string_view text);

/// Syntactic validity (balanced character classes, non-empty).
bool glob_valid(std::string_view pattern);

}  // namespace archrec
