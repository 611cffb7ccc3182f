#include "wordsig/corpus.hpp"
#include "wordsig/errors.hpp"
#include "wordsig/random.hpp"
#include "wordsig/stopwords.hpp"
#include "wordsig/tex_strip.hpp"
#include "wordsig/tokenize.hpp"
#include "wordsig/vocabulary.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace wordsig;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(std::string const &name)
{
  auto dir = fs::temp_directory_path() / ("wordsig_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(fs::path const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("strip_tex keeps plain text")
{
  CHECK(strip_tex("gauge theory") == "gauge theory");
  CHECK(strip_tex("") == "");
}

TEST_CASE("strip_tex drops commands but keeps formatting arguments")
{
  CHECK(strip_tex("\\emph{gauge} theory") == "gauge theory");
  CHECK(strip_tex("\\textbf{string} \\textit{field}") == "string field");
  CHECK(strip_tex("see \\cite{witten95} now") == "see  now");
  CHECK(strip_tex("eq.~\\ref{eq:1}") == "eq. ");
}

TEST_CASE("strip_tex removes math and comments")
{
  CHECK(strip_tex("mass $m^2$ term % note") == "mass  term ");
  CHECK(strip_tex("a $$x = y$$ b") == "a  b");
  CHECK(strip_tex("a \\(x\\) b \\[y\\] c") == "a  b  c");
  CHECK(strip_tex("a\n% full comment line\nb") == "a\n\nb");
  CHECK(strip_tex("x \\begin{equation} E = mc^2 \\end{equation} y") == "x  y");
}

TEST_CASE("strip_tex degrades on unbalanced math to end of line")
{
  CHECK(strip_tex("open $x + y\nnext line") == "open \nnext line");
  CHECK(strip_tex("open $$x\nrest") == "open \nrest");
}

TEST_CASE("strip_tex handles escapes, accents and braces")
{
  CHECK(strip_tex("100\\% sure") == "100% sure");
  CHECK(strip_tex("Schr\\\"{o}dinger") == "Schrodinger");
  CHECK(strip_tex("{\\it de Sitter} space") == " de Sitter space");
  CHECK(strip_tex("a \\$ b") == "a $ b");
  CHECK(strip_tex("trailing \\") == "trailing ");
}

TEST_CASE("strip_tex output has no backslash commands or math")
{
  Rng                    rng = make_rng(11);
  std::string const      alphabet = "ab \\${}%\n^_()";
  for (int trial = 0; trial < 500; ++trial)
  {
    std::string text;
    auto const  len = uniform_below(rng, 40);
    for (std::uint32_t i = 0; i < len; ++i)
    {
      text.push_back(alphabet[uniform_below(rng, static_cast<std::uint32_t>(alphabet.size()))]);
    }
    auto const out = strip_tex(text);
    CHECK(out.find('{') == std::string::npos);
    CHECK(out.find('}') == std::string::npos);
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
    {
      bool const command = out[i] == '\\' && std::isalpha(static_cast<unsigned char>(out[i + 1]));
      CHECK_FALSE(command);
    }
  }
}

TEST_CASE("normalize_tokenize lowercases and separates punctuation")
{
  CHECK(normalize_tokenize("We show that") == TokenSequence{"we", "show", "that"});
  CHECK(normalize_tokenize("(gauge) model.") == TokenSequence{"(", "gauge", ")", "model", "."});
  CHECK(normalize_tokenize("").empty());
  CHECK(normalize_tokenize("   \n\t ").empty());
  CHECK(normalize_tokenize("two-loop 3.2 N=4") ==
        TokenSequence{"two", "-", "loop", "3", ".", "2", "n", "=", "4"});
  CHECK(normalize_tokenize("caf\xc3\xa9 Ok") == TokenSequence{"caf\xc3\xa9", "ok"});
}

TEST_CASE("normalize_tokenize is idempotent and conserves characters")
{
  Rng               rng      = make_rng(5);
  std::string const alphabet = "aZ9 .,;()-/\"'\t\nxY";
  for (int trial = 0; trial < 500; ++trial)
  {
    std::string text;
    auto const  len = uniform_below(rng, 60);
    for (std::uint32_t i = 0; i < len; ++i)
    {
      text.push_back(alphabet[uniform_below(rng, static_cast<std::uint32_t>(alphabet.size()))]);
    }
    auto const tokens = normalize_tokenize(text);
    CHECK(normalize_tokenize(join_tokens(tokens)) == tokens);

    std::string stripped;
    for (char c : text)
    {
      if (c != ' ' && c != '\t' && c != '\n')
      {
        stripped.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    std::string const concatenated = std::accumulate(tokens.begin(), tokens.end(), std::string());
    CHECK(concatenated == stripped);
    for (auto const &t : tokens)
    {
      CHECK_FALSE(t.empty());
    }
  }
}

TEST_CASE("is_punctuation_token")
{
  CHECK(is_punctuation_token("."));
  CHECK(is_punctuation_token(")"));
  CHECK_FALSE(is_punctuation_token("a"));
  CHECK_FALSE(is_punctuation_token("7"));
  CHECK_FALSE(is_punctuation_token(".."));
  CHECK_FALSE(is_punctuation_token(""));
}

TEST_CASE("tsv corpus reader")
{
  std::istringstream in("d1\tGauge theory.\n\nd2\t$x$ Strings\r\n");
  auto const         docs = read_tsv_corpus(in);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "d1");
  CHECK(docs[1].text == "$x$ Strings");

  std::istringstream missing_tab("d1 no tab here\n");
  CHECK_THROWS_AS(read_tsv_corpus(missing_tab), ParseError);

  std::istringstream duplicate("a\tx\nb\ty\na\tz\n");
  try
  {
    read_tsv_corpus(duplicate);
    FAIL("expected ParseError");
  }
  catch (ParseError const &e)
  {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("arXiv abstract files yield title and abstract")
{
  std::string const abs =
      "------------------------------------------------------------------------------\n"
      "\\\\\n"
      "Paper: hep-th/9201001\n"
      "From: someone@example.org\n"
      "Date: Mon, 6 Jan 92 12:00:00 GMT\n"
      "\n"
      "Title: Quantum Group Symmetry\n"
      "  and de Sitter Space\n"
      "Authors: A. Author\n"
      "Comments: 10 pages\n"
      "\\\\\n"
      "  We study the $q$-deformed algebra.\n"
      "\\\\\n";
  auto const doc = parse_arxiv_abstract(abs, "9201001.abs");
  CHECK(doc.id == "9201001.abs");
  CHECK(doc.text == "Quantum Group Symmetry and de Sitter Space\n  We study the $q$-deformed algebra.");

  auto const plain = parse_arxiv_abstract("no separators", "x");
  CHECK(plain.text == "no separators");
}

TEST_CASE("read_raw_corpus handles directories, files and errors")
{
  auto const dir = make_temp_dir("raw_corpus");
  write_text(dir / "b.txt", "Second doc");
  fs::create_directories(dir / "sub");
  write_text(dir / "sub" / "a.txt", "First doc");
  write_text(dir / "a.txt", "Zero");

  auto const docs = read_raw_corpus(dir);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].id == "a.txt");
  CHECK(docs[1].id == "b.txt");
  CHECK(docs[2].id == "sub/a.txt");

  auto const empty = make_temp_dir("raw_corpus_empty");
  CHECK_THROWS_AS(read_raw_corpus(empty), EmptyCorpusError);
  CHECK_THROWS_AS(read_raw_corpus(dir / "missing"), ParseError);
  CHECK_THROWS_AS(read_raw_corpus(dir / "a.txt", CorpusFormat::kTextDirectory), ConfigError);
  CHECK_THROWS_AS(parse_corpus_format("xml"), ConfigError);

  auto const abs_dir = make_temp_dir("raw_corpus_abs");
  write_text(abs_dir / "1.abs", "\\\\\nTitle: T\n\\\\\nBody\n\\\\\n");
  write_text(abs_dir / "README", "ignored");
  auto const abs_docs = read_raw_corpus(abs_dir);
  REQUIRE(abs_docs.size() == 1);
  CHECK(abs_docs[0].text == "T\nBody");
}

TEST_CASE("tokenize_corpus is independent of worker count")
{
  std::vector<RawDocument> docs;
  for (int i = 0; i < 37; ++i)
  {
    docs.push_back({std::to_string(i), "Doc " + std::to_string(i) + " \\emph{x}, $y$ (z)."});
  }
  auto const one  = tokenize_corpus(docs, 1);
  auto const four = tokenize_corpus(docs, 4);
  REQUIRE(one.document_count() == 37);
  CHECK(one.total_tokens() == four.total_tokens());
  for (std::size_t i = 0; i < docs.size(); ++i)
  {
    CHECK(one.documents()[i] == four.documents()[i]);
  }
  CHECK(one.documents()[3] == TokenSequence{"doc", "3", "x", ",", "(", "z", ")", "."});
}

TEST_CASE("tokenized corpus file round trip keeps empty documents")
{
  TokenizedCorpus corpus;
  corpus.add_document({"a", "b"});
  corpus.add_document({});
  corpus.add_document({"."});
  std::stringstream io;
  write_tokenized_corpus(io, corpus);
  CHECK(io.str() == "a b\n\n.\n");
  auto const back = read_tokenized_corpus(io);
  REQUIRE(back.document_count() == 3);
  CHECK(back.total_tokens() == 3);
  CHECK(back.documents()[1].empty());
}

TEST_CASE("build_vocabulary counts and filters")
{
  TokenizedCorpus const corpus({{"a", "b", "a"}});
  auto const            all = build_vocabulary(corpus, 1);
  REQUIRE(all.size() == 2);
  CHECK(all.term(0) == "a");
  CHECK(all.count(0) == 2);
  CHECK(all.count(all.index("b")) == 1);
  CHECK(all.total_count() == corpus.total_tokens());

  auto const frequent = build_vocabulary(corpus, 2);
  REQUIRE(frequent.size() == 1);
  CHECK(frequent.term(0) == "a");
  CHECK(frequent.total_count() <= corpus.total_tokens());

  CHECK_THROWS_AS(build_vocabulary(TokenizedCorpus{}, 1), EmptyCorpusError);
  CHECK_THROWS_AS(build_vocabulary(TokenizedCorpus({{}, {}}), 1), EmptyCorpusError);
  CHECK_THROWS_AS(all.index("zzz"), NotFoundError);
  CHECK_FALSE(all.find("zzz").has_value());
}

TEST_CASE("vocabulary invariants on random corpora")
{
  Rng rng = make_rng(3);
  for (int trial = 0; trial < 50; ++trial)
  {
    std::vector<TokenSequence> docs(1 + uniform_below(rng, 5));
    for (auto &doc : docs)
    {
      auto const len = uniform_below(rng, 30);
      for (std::uint32_t i = 0; i < len; ++i)
      {
        doc.push_back(std::string(1, static_cast<char>('a' + uniform_below(rng, 12))));
      }
    }
    TokenizedCorpus const corpus(docs);
    if (corpus.empty())
    {
      continue;
    }
    auto const vocab = build_vocabulary(corpus, 1);
    CHECK(vocab.total_count() == corpus.total_tokens());

    std::vector<bool> seen(vocab.size(), false);
    for (auto const &entry : vocab.entries())
    {
      auto const i = vocab.index(entry.term);
      CHECK(vocab.term(i) == entry.term);
      seen[i] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    for (std::size_t i = 1; i < vocab.size(); ++i)
    {
      auto const &prev = vocab.entries()[i - 1];
      auto const &cur  = vocab.entries()[i];
      CHECK((prev.count > cur.count || (prev.count == cur.count && prev.term < cur.term)));
    }

    auto const min3 = build_vocabulary(corpus, 3);
    for (auto const &entry : min3.entries())
    {
      CHECK(entry.count >= 3);
      CHECK(entry.count == vocab.count(vocab.index(entry.term)));
    }
  }
}

TEST_CASE("stop word list")
{
  auto const &stop = StopWordList::english();
  CHECK(stop.size() == 127);
  CHECK(stop.contains("the"));
  CHECK(stop.contains("of"));
  CHECK(stop.contains("and"));
  CHECK_FALSE(stop.contains("also"));
  CHECK_FALSE(stop.contains("theory"));

  std::istringstream in("# comment\nfoo\n\n  bar \n");
  auto const         custom = StopWordList::from_stream(in);
  CHECK(custom.size() == 2);
  CHECK(custom.contains("bar"));
}

TEST_CASE("term_frequency_list filters and orders")
{
  TokenizedCorpus const corpus({{"the", "theory", ".", "the", "theory", "gauge", ",", "the", "also", "zeta"}});
  auto const            vocab = build_vocabulary(corpus, 1);

  auto const unfiltered = term_frequency_list(vocab, nullptr, false, 1);
  REQUIRE(unfiltered.size() == 1);
  CHECK(unfiltered[0] == TermFrequency{"the", 3});

  auto const filtered = term_frequency_list(vocab, &StopWordList::english(), true);
  REQUIRE(filtered.size() == 4);
  CHECK(filtered[0] == TermFrequency{"theory", 2});
  CHECK(filtered[1] == TermFrequency{"also", 1});
  CHECK(filtered[2] == TermFrequency{"gauge", 1});
  CHECK(filtered[3] == TermFrequency{"zeta", 1});
  for (auto const &tf : filtered)
  {
    CHECK_FALSE(StopWordList::english().contains(tf.term));
    CHECK_FALSE(is_punctuation_token(tf.term));
  }

  CHECK(term_frequency_list(Vocabulary{}, nullptr, true, 10).empty());
  CHECK(term_frequency_list(vocab, nullptr, false, 1000).size() == vocab.size());
}

TEST_CASE("vocabulary file round trip and errors")
{
  TokenizedCorpus const corpus({{"x", "y", "x", "z", "x", "y"}});
  auto const            vocab = build_vocabulary(corpus, 1);
  std::stringstream     io;
  write_vocabulary(io, vocab);
  CHECK(io.str() == "x\t3\ny\t2\nz\t1\n");
  auto const back = read_vocabulary(io);
  CHECK(back.entries().size() == 3);
  CHECK(back.count(back.index("y")) == 2);

  std::istringstream bad_count("x\t3\ny\tlots\n");
  try
  {
    read_vocabulary(bad_count);
    FAIL("expected ParseError");
  }
  catch (ParseError const &e)
  {
    CHECK(e.line() == 2);
  }
  std::istringstream dup("x\t3\nx\t2\n");
  CHECK_THROWS_AS(read_vocabulary(dup), ParseError);
}
