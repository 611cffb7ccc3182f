#include "wordsig/vocabulary.hpp"

#include "wordsig/errors.hpp"
#include "wordsig/stopwords.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace wordsig {

Vocabulary Vocabulary::from_entries(std::vector<VocabEntry> entries)
{
  if (entries.size() > std::numeric_limits<TermIndex>::max())
  {
    throw std::invalid_argument("vocabulary too large");
  }
  std::sort(entries.begin(), entries.end(), [](VocabEntry const &a, VocabEntry const &b) {
    return a.count != b.count ? a.count > b.count : a.term < b.term;
  });

  Vocabulary vocab;
  vocab.lookup_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
  {
    if (entries[i].count == 0)
    {
      throw std::invalid_argument("zero count for term '" + entries[i].term + "'");
    }
    if (!vocab.lookup_.emplace(entries[i].term, static_cast<TermIndex>(i)).second)
    {
      throw std::invalid_argument("duplicate term '" + entries[i].term + "'");
    }
    vocab.total_count_ += entries[i].count;
  }
  vocab.entries_ = std::move(entries);
  return vocab;
}

std::optional<TermIndex> Vocabulary::find(std::string_view term) const
{
  auto const it = lookup_.find(term);
  if (it == lookup_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

TermIndex Vocabulary::index(std::string_view term) const
{
  if (auto const i = find(term))
  {
    return *i;
  }
  throw NotFoundError("term not in vocabulary: '" + std::string(term) + "'");
}

Vocabulary build_vocabulary(TokenizedCorpus const &corpus, std::uint64_t min_count)
{
  if (corpus.empty())
  {
    throw EmptyCorpusError("cannot build a vocabulary from an empty corpus");
  }
  if (min_count == 0)
  {
    throw ConfigError("min_count must be >= 1");
  }

  std::unordered_map<std::string, std::uint64_t, detail::StringHash, std::equal_to<>> counts;
  for (auto const &doc : corpus.documents())
  {
    for (auto const &token : doc)
    {
      auto it = counts.find(std::string_view(token));
      if (it == counts.end())
      {
        counts.emplace(token, 1);
      }
      else
      {
        ++it->second;
      }
    }
  }

  std::vector<VocabEntry> entries;
  entries.reserve(counts.size());
  for (auto &[term, count] : counts)
  {
    if (count >= min_count)
    {
      entries.push_back({term, count});
    }
  }
  return Vocabulary::from_entries(std::move(entries));
}

std::vector<TermFrequency> term_frequency_list(Vocabulary const &vocab, StopWordList const *stopwords,
                                               bool exclude_punctuation, std::size_t top_n)
{
  std::vector<TermFrequency> list;
  for (auto const &entry : vocab.entries())
  {
    if (list.size() >= top_n)
    {
      break;
    }
    if (stopwords != nullptr && stopwords->contains(entry.term))
    {
      continue;
    }
    if (exclude_punctuation && is_punctuation_token(entry.term))
    {
      continue;
    }
    list.push_back({entry.term, entry.count});
  }
  return list;
}

void write_vocabulary(std::ostream &out, Vocabulary const &vocab)
{
  for (auto const &entry : vocab.entries())
  {
    out << entry.term << '\t' << entry.count << '\n';
  }
}

Vocabulary read_vocabulary(std::istream &in)
{
  std::vector<VocabEntry> entries;
  std::string             line;
  std::size_t             line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.empty())
    {
      continue;
    }
    auto const tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
    {
      throw ParseError("expected 'term<TAB>count'", line_no);
    }
    VocabEntry  entry{line.substr(0, tab), 0};
    char const *first = line.data() + tab + 1;
    char const *last  = line.data() + line.size();
    auto const [ptr, ec] = std::from_chars(first, last, entry.count);
    if (ec != std::errc() || ptr != last || entry.count == 0)
    {
      throw ParseError("invalid count for term '" + entry.term + "'", line_no);
    }
    entries.push_back(std::move(entry));
  }
  try
  {
    return Vocabulary::from_entries(std::move(entries));
  }
  catch (std::invalid_argument const &e)
  {
    throw ParseError(e.what());
  }
}

void save_vocabulary(std::filesystem::path const &path, Vocabulary const &vocab)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError("cannot write " + path.string());
  }
  write_vocabulary(out, vocab);
}

Vocabulary load_vocabulary(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  return read_vocabulary(in);
}

}  // namespace wordsig
