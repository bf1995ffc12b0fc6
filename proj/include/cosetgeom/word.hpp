#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cosetgeom {

/// A word in a free group. Letter +k is the k-th generator (1-based),
/// letter -k its inverse. The empty word is the identity.
struct Word {
  std::vector<int> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& u, const Word& v);

/// Cyclically reduced form: strips matching letter/inverse pairs at the ends.
Word cyclic_reduce(const Word& w);

/// Renders a word with runs compressed as powers, e.g. "aBab^2". `names`
/// holds the lowercase generator letters in declaration order.
std::string render_word(const Word& w, std::string_view names);

}  // namespace cosetgeom
