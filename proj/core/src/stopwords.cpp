#include "wordsig/stopwords.hpp"

#include "wordsig/errors.hpp"

#include <fstream>
#include <sstream>

namespace wordsig {
namespace detail {
extern std::string_view const kEnglishStopWords;
}  // namespace detail

StopWordList const &StopWordList::english()
{
  static StopWordList const list = [] {
    std::istringstream in{std::string(detail::kEnglishStopWords)};
    return from_stream(in);
  }();
  return list;
}

StopWordList StopWordList::from_stream(std::istream &in)
{
  std::set<std::string, std::less<>> terms;
  std::string line;
  while (std::getline(in, line))
  {
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
    {
      continue;
    }
    auto const last = line.find_last_not_of(" \t\r");
    terms.emplace(line.substr(first, last - first + 1));
  }
  return StopWordList(std::move(terms));
}

StopWordList StopWordList::from_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError("cannot open stop word list " + path.string());
  }
  return from_stream(in);
}

}  // namespace wordsig
