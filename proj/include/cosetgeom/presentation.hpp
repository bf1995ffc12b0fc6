#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cosetgeom/word.hpp"

namespace cosetgeom {

/// A finitely presented group <generators | relators>.
/// Relators are freely reduced and non-empty; they are not cyclically
/// reduced.
struct Presentation {
  std::string generator_names;  // one lowercase letter per generator
  std::vector<Word> relators;

  int generator_count() const noexcept {
    return static_cast<int>(generator_names.size());
  }

  /// Text form accepted back by parse_presentation.
  std::string render() const;

  /// Parses a word over this presentation's alphabet (same syntax as
  /// relators, but the empty word is allowed).
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses "a,b | w1, w2, ...". Lowercase letters are generators, uppercase
/// their inverses, `^n` (n may be negative) powers the preceding letter or
/// parenthesized group. Throws ParseError.
Presentation parse_presentation(std::string_view text);

/// Reads the first non-blank, non-comment line of a file ('#' comments).
Presentation load_presentation(const std::filesystem::path& path);

}  // namespace cosetgeom
