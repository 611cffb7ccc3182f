#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordsig {

/// Malformed input file. `line()` is 1-based, 0 when the position is unknown.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &what, std::size_t line = 0)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
    , line_(line)
  {}

  std::size_t line() const noexcept
  {
    return line_;
  }

private:
  std::size_t line_;
};

class EmptyCorpusError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class NotFoundError : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// Invalid training or analysis configuration.
class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Training aborted, e.g. on a non-finite activation.
class TrainingError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordsig
