#include "cosetgeom/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace cosetgeom {

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (int x : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -x) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

Word word_concat(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return free_reduce(out);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo),
               r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

std::string render_word(const Word& w, std::string_view names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    int x = w.letters[i];
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == x) ++run;
    int g = std::abs(x);
    if (g < 1 || static_cast<std::size_t>(g) > names.size()) {
      throw std::out_of_range("letter outside the generator alphabet");
    }
    char c = names[static_cast<std::size_t>(g - 1)];
    out.push_back(x > 0 ? c : static_cast<char>(std::toupper(c)));
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace cosetgeom
