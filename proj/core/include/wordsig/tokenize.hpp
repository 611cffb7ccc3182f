#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wordsig {

using TokenSequence = std::vector<std::string>;

/// Lowercases ASCII letters, splits on whitespace and emits every other
/// non-alphanumeric ASCII character as a token of its own. Bytes of multi-byte
/// UTF-8 sequences count as word characters and are kept verbatim.
TokenSequence normalize_tokenize(std::string_view text);

/// True for a token made of a single non-alphanumeric ASCII character.
bool is_punctuation_token(std::string_view token) noexcept;

/// Joins tokens with single spaces.
std::string join_tokens(TokenSequence const &tokens);

}  // namespace wordsig
