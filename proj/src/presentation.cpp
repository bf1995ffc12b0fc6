#include "cosetgeom/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view names, std::size_t offset = 0)
      : text_(text), names_(names), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t pos() const { return pos_; }
  void consume() { ++pos_; }

  // word := factor+, stopping at ',', ')' or end.
  Word parse_word() {
    Word w;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ',' || c == ')') break;
      Word f = parse_factor();
      w.letters.insert(w.letters.end(), f.letters.begin(), f.letters.end());
    }
    return w;
  }

 private:
  Word parse_factor() {
    Word atom;
    char c = peek();
    if (c == '(') {
      ++pos_;
      atom = parse_word();
      if (peek() != ')') throw ParseError("expected ')'", offset_ + pos_);
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto idx = names_.find(lower);
      if (idx == std::string_view::npos) {
        throw ParseError(std::string("unknown letter '") + c + "'", offset_ + pos_);
      }
      int g = static_cast<int>(idx) + 1;
      atom.letters.push_back(std::islower(static_cast<unsigned char>(c)) ? g : -g);
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", offset_ + pos_);
    }
    if (peek() != '^') return atom;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    long n = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      if (n > 1000000) throw ParseError("exponent too large", offset_ + start);
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("malformed exponent", offset_ + start);
    Word base = negative ? word_inverse(atom) : atom;
    Word out;
    for (long k = 0; k < n; ++k) {
      out.letters.insert(out.letters.end(), base.letters.begin(),
                         base.letters.end());
    }
    return out;
  }

  std::string_view text_;
  std::string_view names_;
  std::size_t offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Presentation::render() const {
  std::string out;
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (i) out += ",";
    out.push_back(generator_names[i]);
  }
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += i ? ", " : " ";
    out += render_word(relators[i], generator_names);
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  Parser p(text, generator_names);
  Word w = p.parse_word();
  if (!p.at_end()) throw ParseError("trailing characters", p.pos());
  return free_reduce(w);
}

Presentation parse_presentation(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|'", text.size());

  Presentation result;
  std::size_t i = 0;
  bool expect_letter = true;
  for (; i < bar; ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (expect_letter) {
      if (!std::islower(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("invalid generator name '") + c + "'", i);
      }
      if (result.generator_names.find(c) != std::string::npos) {
        throw ParseError(std::string("duplicate generator '") + c + "'", i);
      }
      result.generator_names.push_back(c);
      expect_letter = false;
    } else {
      if (c != ',') throw ParseError("expected ','", i);
      expect_letter = true;
    }
  }
  if (result.generator_names.empty() || expect_letter) {
    throw ParseError("expected generator letter", i);
  }

  std::string_view rest = text.substr(bar + 1);
  Parser p(rest, result.generator_names, bar + 1);
  if (p.at_end()) return result;
  while (true) {
    p.skip_space();
    std::size_t start = bar + 1 + p.pos();
    Word w = free_reduce(p.parse_word());
    if (w.empty()) throw ParseError("empty relator", start);
    result.relators.push_back(std::move(w));
    char c = p.peek();
    if (c == '\0') break;
    if (c != ',') throw ParseError("expected ','", bar + 1 + p.pos());
    p.consume();
  }
  return result;
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return parse_presentation(line);
  }
  throw ParseError("no presentation found in " + path.string(), 0);
}

}  // namespace cosetgeom
