#include "wordsig/tokenize.hpp"

namespace wordsig {
namespace {

bool is_space(unsigned char c)
{
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_char(unsigned char c)
{
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c >= 0x80;
}

char to_lower(unsigned char c)
{
  return static_cast<char>((c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c);
}

}  // namespace

TokenSequence normalize_tokenize(std::string_view text)
{
  TokenSequence tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty())
    {
      tokens.push_back(std::move(word));
      word.clear();
    }
  };

  for (char const ch : text)
  {
    auto const c = static_cast<unsigned char>(ch);
    if (is_word_char(c))
    {
      word.push_back(to_lower(c));
    }
    else if (is_space(c))
    {
      flush();
    }
    else if (c >= 0x20 && c != 0x7f)
    {
      flush();
      tokens.emplace_back(1, ch);
    }
    else
    {
      // Control characters separate tokens but are not tokens themselves.
      flush();
    }
  }
  flush();
  return tokens;
}

bool is_punctuation_token(std::string_view token) noexcept
{
  if (token.size() != 1)
  {
    return false;
  }
  auto const c = static_cast<unsigned char>(token.front());
  return !is_word_char(c) && !is_space(c);
}

std::string join_tokens(TokenSequence const &tokens)
{
  std::string out;
  for (auto const &t : tokens)
  {
    if (!out.empty())
    {
      out.push_back(' ');
    }
    out += t;
  }
  return out;
}

}  // namespace wordsig
