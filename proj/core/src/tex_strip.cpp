#include "wordsig/tex_strip.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace wordsig {
namespace {

constexpr std::array<std::string_view, 14> kDropArgumentCommands = {
    "cite", "citep", "citet", "ref", "eqref", "pageref", "label", "url", "href",
    "includegraphics", "bibliography", "bibliographystyle", "input", "include"};

constexpr std::array<std::string_view, 10> kMathEnvironments = {
    "equation", "equation*", "eqnarray", "eqnarray*", "align",
    "align*",   "displaymath", "math",   "gather",    "gather*"};

bool is_letter(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

std::size_t end_of_line(std::string_view text, std::size_t pos)
{
  auto const nl = text.find('\n', pos);
  return nl == std::string_view::npos ? text.size() : nl;
}

// Position just past `closer`, skipping backslash escapes; npos if absent.
std::size_t find_closer(std::string_view text, std::size_t pos, std::string_view closer)
{
  while (pos < text.size())
  {
    if (text.compare(pos, closer.size(), closer) == 0)
    {
      return pos + closer.size();
    }
    if (text[pos] == '\\' && closer.front() != '\\')
    {
      pos += 2;
      continue;
    }
    ++pos;
  }
  return std::string_view::npos;
}

// Skips a math span opened just before `pos`. Unterminated spans end at the
// end of the line; the newline itself is kept.
std::size_t skip_math(std::string_view text, std::size_t pos, std::string_view closer)
{
  auto const end = find_closer(text, pos, closer);
  return end == std::string_view::npos ? end_of_line(text, pos) : end;
}

// Skips a balanced `open ... close` group starting at `pos` (which must hold
// `open`). Unbalanced groups run to the end of the text.
std::size_t skip_group(std::string_view text, std::size_t pos, char open, char close)
{
  int depth = 0;
  for (; pos < text.size(); ++pos)
  {
    char const c = text[pos];
    if (c == '\\')
    {
      ++pos;
      continue;
    }
    if (c == open)
    {
      ++depth;
    }
    else if (c == close && --depth == 0)
    {
      return pos + 1;
    }
  }
  return text.size();
}

std::size_t skip_spaces(std::string_view text, std::size_t pos)
{
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
  {
    ++pos;
  }
  return pos;
}

std::string_view read_braced_word(std::string_view text, std::size_t pos)
{
  if (pos >= text.size() || text[pos] != '{')
  {
    return {};
  }
  auto const close = text.find('}', pos);
  if (close == std::string_view::npos)
  {
    return {};
  }
  return text.substr(pos + 1, close - pos - 1);
}

}  // namespace

std::string strip_tex(std::string_view text)
{
  std::string out;
  out.reserve(text.size());

  std::size_t i = 0;
  while (i < text.size())
  {
    char const c = text[i];
    switch (c)
    {
    case '%':
      i = end_of_line(text, i);
      break;
    case '$':
      if (i + 1 < text.size() && text[i + 1] == '$')
      {
        i = skip_math(text, i + 2, "$$");
      }
      else
      {
        i = skip_math(text, i + 1, "$");
      }
      break;
    case '{':
    case '}':
      ++i;
      break;
    case '~':
      out.push_back(' ');
      ++i;
      break;
    case '\\':
    {
      if (i + 1 >= text.size())
      {
        i = text.size();
        break;
      }
      char const next = text[i + 1];
      if (is_letter(next))
      {
        std::size_t j = i + 1;
        while (j < text.size() && is_letter(text[j]))
        {
          ++j;
        }
        std::string_view const name = text.substr(i + 1, j - i - 1);
        if (j < text.size() && text[j] == '*')
        {
          ++j;
        }

        if (name == "begin")
        {
          auto const env = read_braced_word(text, skip_spaces(text, j));
          if (std::find(kMathEnvironments.begin(), kMathEnvironments.end(), env) !=
              kMathEnvironments.end())
          {
            std::string closer = "\\end{";
            closer.append(env).push_back('}');
            i = skip_math(text, j, closer);
            break;
          }
        }
        if (name == "begin" || name == "end" ||
            std::find(kDropArgumentCommands.begin(), kDropArgumentCommands.end(), name) !=
                kDropArgumentCommands.end())
        {
          std::size_t k = skip_spaces(text, j);
          while (k < text.size() && text[k] == '[')
          {
            k = skip_spaces(text, skip_group(text, k, '[', ']'));
          }
          if (k < text.size() && text[k] == '{')
          {
            j = skip_group(text, k, '{', '}');
          }
        }
        i = j;
      }
      else if (next == '(')
      {
        i = skip_math(text, i + 2, "\\)");
      }
      else if (next == '[')
      {
        i = skip_math(text, i + 2, "\\]");
      }
      else if (next == '%' || next == '$' || next == '&' || next == '#' || next == '_')
      {
        out.push_back(next);
        i += 2;
      }
      else if (next == '\\')
      {
        out.push_back(' ');
        i += 2;
      }
      else
      {
        // Accents, spacing and other control symbols.
        i += 2;
      }
      break;
    }
    default:
      out.push_back(c);
      ++i;
      break;
    }
  }
  return out;
}

}  // namespace wordsig
