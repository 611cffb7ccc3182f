#include "wordsig/corpus.hpp"

#include "wordsig/errors.hpp"
#include "wordsig/tex_strip.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace wordsig {
namespace fs = std::filesystem;

TokenizedCorpus::TokenizedCorpus(std::vector<TokenSequence> documents)
  : documents_(std::move(documents))
{
  for (auto const &doc : documents_)
  {
    total_tokens_ += doc.size();
  }
}

void TokenizedCorpus::add_document(TokenSequence document)
{
  total_tokens_ += document.size();
  documents_.push_back(std::move(document));
}

CorpusFormat parse_corpus_format(std::string_view name)
{
  if (name == "auto")
  {
    return CorpusFormat::kAuto;
  }
  if (name == "tsv")
  {
    return CorpusFormat::kTsv;
  }
  if (name == "dir" || name == "text")
  {
    return CorpusFormat::kTextDirectory;
  }
  if (name == "arxiv" || name == "abs")
  {
    return CorpusFormat::kArxivAbstracts;
  }
  throw ConfigError("unsupported corpus format '" + std::string(name) + "'");
}

std::vector<RawDocument> read_tsv_corpus(std::istream &in)
{
  std::vector<RawDocument>        docs;
  std::unordered_set<std::string> ids;
  std::string                     line;
  std::size_t                     line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.find_first_not_of(" \t") == std::string::npos)
    {
      continue;
    }
    auto const tab = line.find('\t');
    if (tab == std::string::npos)
    {
      throw ParseError("expected 'id<TAB>text'", line_no);
    }
    RawDocument doc{line.substr(0, tab), line.substr(tab + 1)};
    if (!ids.insert(doc.id).second)
    {
      throw ParseError("duplicate document id '" + doc.id + "'", line_no);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

namespace {

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
  std::vector<std::string_view> lines;
  std::size_t                   pos = 0;
  while (pos <= text.size())
  {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
    {
      nl = text.size();
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string read_file(fs::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<fs::path> regular_files(fs::path const &dir)
{
  std::vector<fs::path> files;
  for (auto const &entry : fs::recursive_directory_iterator(dir))
  {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
    {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

RawDocument parse_arxiv_abstract(std::string_view contents, std::string id)
{
  auto const lines = split_lines(contents);

  std::vector<std::size_t> separators;
  for (std::size_t i = 0; i < lines.size(); ++i)
  {
    if (trim(lines[i]) == "\\\\")
    {
      separators.push_back(i);
    }
  }
  if (separators.size() < 2)
  {
    return {std::move(id), std::string(contents)};
  }

  std::string title;
  for (std::size_t i = separators[0] + 1; i < separators[1]; ++i)
  {
    auto const line = lines[i];
    if (line.starts_with("Title:"))
    {
      title.append(trim(line.substr(6)));
      for (std::size_t j = i + 1; j < separators[1]; ++j)
      {
        if (lines[j].empty() || (lines[j].front() != ' ' && lines[j].front() != '\t'))
        {
          break;
        }
        title.push_back(' ');
        title.append(trim(lines[j]));
      }
      break;
    }
  }

  std::size_t const end = separators.size() > 2 ? separators[2] : lines.size();
  std::string       text = std::move(title);
  for (std::size_t i = separators[1] + 1; i < end; ++i)
  {
    text.push_back('\n');
    text.append(lines[i]);
  }
  return {std::move(id), std::move(text)};
}

std::vector<RawDocument> read_raw_corpus(fs::path const &path, CorpusFormat format)
{
  if (!fs::exists(path))
  {
    throw ParseError("no such corpus path: " + path.string());
  }

  std::vector<RawDocument> docs;
  if (fs::is_directory(path))
  {
    auto const files = regular_files(path);
    if (format == CorpusFormat::kAuto)
    {
      bool const arxiv = std::any_of(files.begin(), files.end(),
                                     [](fs::path const &p) { return p.extension() == ".abs"; });
      format = arxiv ? CorpusFormat::kArxivAbstracts : CorpusFormat::kTextDirectory;
    }
    if (format == CorpusFormat::kTsv)
    {
      throw ConfigError("tsv format expects a file, got directory " + path.string());
    }
    for (auto const &file : files)
    {
      auto id = fs::relative(file, path).generic_string();
      if (format == CorpusFormat::kArxivAbstracts)
      {
        if (file.extension() != ".abs")
        {
          continue;
        }
        docs.push_back(parse_arxiv_abstract(read_file(file), std::move(id)));
      }
      else
      {
        docs.push_back({std::move(id), read_file(file)});
      }
    }
  }
  else
  {
    if (format == CorpusFormat::kTextDirectory || format == CorpusFormat::kArxivAbstracts)
    {
      throw ConfigError("format expects a directory, got file " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
      throw ParseError("cannot read " + path.string());
    }
    docs = read_tsv_corpus(in);
  }

  if (docs.empty())
  {
    throw EmptyCorpusError("no documents found in " + path.string());
  }
  return docs;
}

TokenizedCorpus tokenize_corpus(std::span<RawDocument const> documents, unsigned workers)
{
  std::vector<TokenSequence> out(documents.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
    {
      out[i] = normalize_tokenize(strip_tex(documents[i].text));
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(documents.size())));
  if (workers <= 1)
  {
    run(0, documents.size());
  }
  else
  {
    std::vector<std::thread> threads;
    std::size_t const        chunk = (documents.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
      std::size_t const begin = std::min(documents.size(), w * chunk);
      std::size_t const end   = std::min(documents.size(), begin + chunk);
      threads.emplace_back(run, begin, end);
    }
    for (auto &t : threads)
    {
      t.join();
    }
  }
  return TokenizedCorpus(std::move(out));
}

void write_tokenized_corpus(std::ostream &out, TokenizedCorpus const &corpus)
{
  for (auto const &doc : corpus.documents())
  {
    out << join_tokens(doc) << '\n';
  }
}

TokenizedCorpus read_tokenized_corpus(std::istream &in)
{
  TokenizedCorpus corpus;
  std::string     line;
  while (std::getline(in, line))
  {
    TokenSequence      doc;
    std::istringstream words(line);
    std::string        token;
    while (words >> token)
    {
      doc.push_back(std::move(token));
    }
    corpus.add_document(std::move(doc));
  }
  return corpus;
}

void save_tokenized_corpus(fs::path const &path, TokenizedCorpus const &corpus)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError("cannot write " + path.string());
  }
  write_tokenized_corpus(out, corpus);
}

TokenizedCorpus load_tokenized_corpus(fs::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  return read_tokenized_corpus(in);
}

}  // namespace wordsig
