#include "wordsig/plane_export.hpp"

#include "wordsig/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>

namespace wordsig {

using ordered_json = nlohmann::ordered_json;

void export_plane(std::ostream &out, std::span<WordStat const> stats, std::span<BinSummary const> bins,
                  PlaneMeta const &meta)
{
  std::vector<WordStat const *> order;
  order.reserve(stats.size());
  for (auto const &s : stats)
  {
    order.push_back(&s);
  }
  std::sort(order.begin(), order.end(), [](WordStat const *a, WordStat const *b) {
    return a->tf != b->tf ? a->tf > b->tf : a->term < b->term;
  });

  ordered_json doc;
  doc["meta"] = {{"corpus_name", meta.corpus_name},
                 {"dim", meta.dim},
                 {"total_tokens", meta.total_tokens},
                 {"mean_vec_len", meta.mean_vec_len},
                 {"min_tf", meta.min_tf}};

  auto &words = doc["words"] = ordered_json::array();
  for (auto const *s : order)
  {
    ordered_json w;
    w["t"]   = s->term;
    w["tf"]  = s->tf;
    w["v"]   = s->v;
    w["pos"] = s->pos ? ordered_json(*s->pos) : ordered_json(nullptr);
    words.push_back(std::move(w));
  }

  auto &bin_list = doc["bins"] = ordered_json::array();
  for (auto const &b : bins)
  {
    bin_list.push_back(
        {{"k", b.k}, {"lo", b.lo}, {"hi", b.hi}, {"n", b.member_count}, {"mean_v", b.mean_v}});
  }

  out << doc.dump() << '\n';
}

void export_plane(std::filesystem::path const &path, std::span<WordStat const> stats,
                  std::span<BinSummary const> bins, PlaneMeta const &meta)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError("cannot write " + path.string());
  }
  export_plane(out, stats, bins, meta);
  if (!out)
  {
    throw ParseError("write failed for " + path.string());
  }
}

namespace {

template <class T>
T field(ordered_json const &obj, char const *name)
{
  auto const it = obj.find(name);
  if (it == obj.end())
  {
    throw ParseError(fmt::format("missing field '{}'", name));
  }
  try
  {
    return it->template get<T>();
  }
  catch (nlohmann::json::exception const &)
  {
    throw ParseError(fmt::format("field '{}' has the wrong type", name));
  }
}

}  // namespace

PlaneData parse_plane(std::string_view json)
{
  ordered_json doc;
  try
  {
    doc = ordered_json::parse(json.begin(), json.end());
  }
  catch (nlohmann::json::parse_error const &e)
  {
    throw ParseError(fmt::format("explorer data is not valid JSON at byte {}: {}", e.byte, e.what()));
  }
  if (!doc.is_object() || !doc.contains("meta") || !doc.contains("words") || !doc.contains("bins"))
  {
    throw ParseError("explorer data needs top-level 'meta', 'words' and 'bins'");
  }

  PlaneData   data;
  auto const &meta = doc["meta"];
  if (!meta.is_object())
  {
    throw ParseError("'meta' must be an object");
  }
  data.meta.corpus_name  = field<std::string>(meta, "corpus_name");
  data.meta.dim          = field<std::size_t>(meta, "dim");
  data.meta.total_tokens = field<std::uint64_t>(meta, "total_tokens");
  data.meta.mean_vec_len = field<double>(meta, "mean_vec_len");
  data.meta.min_tf       = field<std::uint64_t>(meta, "min_tf");

  if (!doc["words"].is_array() || !doc["bins"].is_array())
  {
    throw ParseError("'words' and 'bins' must be arrays");
  }
  for (auto const &w : doc["words"])
  {
    WordStat s;
    s.term = field<std::string>(w, "t");
    s.tf   = field<std::uint64_t>(w, "tf");
    s.v    = field<double>(w, "v");
    if (!w.contains("pos"))
    {
      throw ParseError("missing field 'pos'");
    }
    if (!w["pos"].is_null())
    {
      s.pos = field<std::string>(w, "pos");
    }
    data.words.push_back(std::move(s));
  }
  for (auto const &b : doc["bins"])
  {
    data.bins.push_back({field<unsigned>(b, "k"), field<std::uint64_t>(b, "lo"),
                         field<std::uint64_t>(b, "hi"), field<std::size_t>(b, "n"),
                         field<double>(b, "mean_v")});
  }
  return data;
}

PlaneData load_plane(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot read " + path.string());
  }
  std::string const text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_plane(text);
}

void write_histogram_csv(std::ostream &out, SimilarityHistogram const &hist)
{
  out << fmt::format("# mean={} pairs={} min_tf={}\n", hist.sample_mean, hist.sample_count, hist.min_tf);
  for (std::size_t b = 0; b < hist.counts.size(); ++b)
  {
    out << fmt::format("{},{},{}\n", hist.bin_edges[b], hist.bin_edges[b + 1], hist.counts[b]);
  }
}

}  // namespace wordsig
