#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/generator_set.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/word.hpp"

namespace coxeter {

/// On-disk description of a Coxeter system:
///   {"rank": n, "m": [[...], ...], "names": ["a", "b", ...]}
/// Labels are integers with 0 standing for infinity; "names" is optional.
struct SystemDocument {
  CoxeterMatrix matrix;
  std::vector<std::string> names;
};

/// Throws ParseError for malformed text or schema violations and
/// ValidationError (message includes the underlying matrix error and its
/// row/column) when the matrix breaks the Coxeter conditions.
SystemDocument parse_system(std::string_view text);
SystemDocument load_system(std::istream& in);
SystemDocument load_system(const std::string& path);

/// Space-separated generator indices (or display names, when the document
/// has them). Throws ParseError on unknown tokens, IndexOutOfRange on
/// letters past the rank.
Word parse_word(std::string_view text, const SystemDocument& doc);
GeneratorSet parse_subset(std::string_view text, const SystemDocument& doc);

}  // namespace coxeter
