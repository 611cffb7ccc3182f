#pragma once

#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>

namespace wordsig {

/// Immutable set of lowercase function words.
class StopWordList
{
public:
  /// The 127-entry English list shipped with the library.
  static StopWordList const &english();

  /// One word per line; blank lines and `#` comments are ignored.
  static StopWordList from_stream(std::istream &in);
  static StopWordList from_file(std::filesystem::path const &path);

  bool contains(std::string_view term) const
  {
    return terms_.find(term) != terms_.end();
  }

  std::size_t size() const noexcept
  {
    return terms_.size();
  }

  std::set<std::string, std::less<>> const &terms() const noexcept
  {
    return terms_;
  }

private:
  explicit StopWordList(std::set<std::string, std::less<>> terms)
    : terms_(std::move(terms))
  {}

  std::set<std::string, std::less<>> terms_;
};

}  // namespace wordsig
