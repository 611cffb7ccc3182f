#pragma once

#include "wordsig/tokenize.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordsig {

/// One title+abstract record.
struct RawDocument
{
  std::string id;
  std::string text;
};

/// Token sequences in document order. Context windows never cross documents.
class TokenizedCorpus
{
public:
  TokenizedCorpus() = default;
  explicit TokenizedCorpus(std::vector<TokenSequence> documents);

  void add_document(TokenSequence document);

  std::span<TokenSequence const> documents() const noexcept
  {
    return documents_;
  }

  std::size_t document_count() const noexcept
  {
    return documents_.size();
  }

  std::size_t total_tokens() const noexcept
  {
    return total_tokens_;
  }

  bool empty() const noexcept
  {
    return total_tokens_ == 0;
  }

private:
  std::vector<TokenSequence> documents_;
  std::size_t                total_tokens_ = 0;
};

enum class CorpusFormat
{
  kAuto,
  kTsv,             ///< `id<TAB>text` lines
  kTextDirectory,   ///< one plain-text file per document
  kArxivAbstracts,  ///< directory of arXiv `.abs` files (KDD Cup 2003 layout)
};

CorpusFormat parse_corpus_format(std::string_view name);

/// Reads `id<TAB>text` records. Blank lines are skipped; a line without a tab
/// or a repeated id is a ParseError.
std::vector<RawDocument> read_tsv_corpus(std::istream &in);

/// Extracts title and abstract from the contents of one arXiv `.abs` file.
RawDocument parse_arxiv_abstract(std::string_view contents, std::string id);

/// Loads documents from a file or directory. Directory entries are visited
/// recursively in lexicographic path order. Throws EmptyCorpusError when no
/// documents are found.
std::vector<RawDocument> read_raw_corpus(std::filesystem::path const &path,
                                         CorpusFormat format = CorpusFormat::kAuto);

/// strip_tex followed by normalize_tokenize for every document. Work is split
/// across `workers` threads; output order always matches input order.
TokenizedCorpus tokenize_corpus(std::span<RawDocument const> documents, unsigned workers = 1);

/// One document per line, tokens joined by single spaces.
void            write_tokenized_corpus(std::ostream &out, TokenizedCorpus const &corpus);
TokenizedCorpus read_tokenized_corpus(std::istream &in);

void            save_tokenized_corpus(std::filesystem::path const &path, TokenizedCorpus const &corpus);
TokenizedCorpus load_tokenized_corpus(std::filesystem::path const &path);

}  // namespace wordsig
