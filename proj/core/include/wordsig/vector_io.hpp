#pragma once

#include "wordsig/matrix.hpp"
#include "wordsig/trainer.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace wordsig {

/// Terms and their input vectors as read from a vector file.
struct VectorTable
{
  std::vector<std::string> terms;
  Matrix<float>            vectors;
};

/// Text vector format: a "V d" header line, then one line per term with the
/// term followed by d space-separated components. Components are written in
/// the shortest form that parses back to the identical float.
void save_vectors(std::ostream &out, EmbeddingModel const &model);
void save_vectors(std::filesystem::path const &path, EmbeddingModel const &model);

/// Throws ParseError (with line number) for a malformed header, a row with
/// the wrong number of components, a non-numeric component or a row count
/// that disagrees with the header.
VectorTable load_vectors(std::istream &in);
VectorTable load_vectors(std::filesystem::path const &path);

/// Pairs loaded vectors with the vocabulary they were trained on. Rows are
/// reordered into vocabulary index order. Throws NotFoundError naming the
/// first term present in one side only.
EmbeddingModel attach_vocabulary(VectorTable table, Vocabulary vocab);

}  // namespace wordsig
