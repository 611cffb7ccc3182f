#pragma once

#include <string>
#include <string_view>

namespace wordsig {

/// Removes TeX markup from abstract-style text.
///
/// Drops `%` comments to end of line, `$...$`, `$$...$$`, `\(...\)` and
/// `\[...\]` math spans, control sequences and braces. The brace-delimited
/// arguments of formatting commands (`\emph{x}` -> `x`) are kept; arguments of
/// reference-like commands (`\cite`, `\ref`, `\label`, `\begin`, ...) are
/// dropped. An unterminated math span is dropped through the end of its line.
/// Escaped specials (`\%`, `\$`, `\&`, `\#`, `\_`) become the literal character
/// and `~` becomes a space.
///
/// This is a best-effort scanner and never fails.
std::string strip_tex(std::string_view text);

}  // namespace wordsig
