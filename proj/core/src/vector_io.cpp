#include "wordsig/vector_io.hpp"

#include "wordsig/errors.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

namespace wordsig {

void save_vectors(std::ostream &out, EmbeddingModel const &model)
{
  auto const &vocab = model.vocab;
  auto const &w     = model.input;
  out << vocab.size() << ' ' << w.cols() << '\n';

  std::string line;
  char        buf[32];
  for (std::size_t i = 0; i < vocab.size(); ++i)
  {
    line = vocab.term(static_cast<TermIndex>(i));
    for (float const x : w.row(i))
    {
      auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
      line.push_back(' ');
      line.append(buf, end);
    }
    line.push_back('\n');
    out << line;
  }
}

void save_vectors(std::filesystem::path const &path, EmbeddingModel const &model)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError("cannot write " + path.string());
  }
  save_vectors(out, model);
  if (!out)
  {
    throw ParseError("write failed for " + path.string());
  }
}

namespace {

template <class T>
bool parse_number(std::string_view field, T &value)
{
  auto const [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::vector<std::string_view> split_fields(std::string_view line)
{
  std::vector<std::string_view> fields;
  std::size_t                   pos = 0;
  while (pos < line.size())
  {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos)
    {
      break;
    }
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos)
    {
      end = line.size();
    }
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

VectorTable load_vectors(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
  {
    throw ParseError("missing 'V d' header", 1);
  }
  auto const  header = split_fields(line);
  std::size_t rows   = 0;
  std::size_t dim    = 0;
  if (header.size() != 2 || !parse_number(header[0], rows) || !parse_number(header[1], dim) ||
      dim == 0)
  {
    throw ParseError("malformed header, expected 'V d'", 1);
  }

  VectorTable table{{}, Matrix<float>(rows, dim)};
  table.terms.reserve(rows);
  std::size_t line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    auto const fields = split_fields(line);
    if (fields.empty())
    {
      continue;
    }
    if (table.terms.size() == rows)
    {
      throw ParseError("more rows than the header's " + std::to_string(rows), line_no);
    }
    if (fields.size() != dim + 1)
    {
      throw ParseError("expected " + std::to_string(dim) + " components, found " +
                           std::to_string(fields.size() - 1),
                       line_no);
    }
    auto row = table.vectors.row(table.terms.size());
    for (std::size_t k = 0; k < dim; ++k)
    {
      if (!parse_number(fields[k + 1], row[k]))
      {
        throw ParseError("non-numeric component '" + std::string(fields[k + 1]) + "'", line_no);
      }
    }
    table.terms.emplace_back(fields[0]);
  }
  if (table.terms.size() != rows)
  {
    throw ParseError("header announces " + std::to_string(rows) + " rows, found " +
                     std::to_string(table.terms.size()));
  }
  return table;
}

VectorTable load_vectors(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  return load_vectors(in);
}

EmbeddingModel attach_vocabulary(VectorTable table, Vocabulary vocab)
{
  std::unordered_set<std::string_view> seen;
  for (auto const &term : table.terms)
  {
    if (!vocab.find(term))
    {
      throw NotFoundError("term '" + term + "' has a vector but is not in the vocabulary");
    }
    if (!seen.insert(term).second)
    {
      throw NotFoundError("term '" + term + "' appears twice in the vector file");
    }
  }
  if (table.terms.size() != vocab.size())
  {
    for (auto const &entry : vocab.entries())
    {
      if (!seen.contains(entry.term))
      {
        throw NotFoundError("term '" + entry.term + "' is in the vocabulary but has no vector");
      }
    }
  }

  Matrix<float> input(vocab.size(), table.vectors.cols());
  for (std::size_t r = 0; r < table.terms.size(); ++r)
  {
    auto const src = table.vectors.row(r);
    auto const dst = input.row(vocab.index(table.terms[r]));
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return EmbeddingModel{std::move(vocab), std::move(input), Matrix<float>()};
}

}  // namespace wordsig
