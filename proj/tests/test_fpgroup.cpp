#include <doctest.h>

#include <random>

#include "cosetgeom/errors.hpp"
#include "cosetgeom/presentation.hpp"
#include "cosetgeom/word.hpp"

using namespace cosetgeom;

namespace {

Word random_word(std::mt19937& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, gens);
  std::bernoulli_distribution sign(0.5);
  Word w;
  for (int i = len(rng); i > 0; --i) w.letters.push_back(sign(rng) ? letter(rng) : -letter(rng));
  return w;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w.letters[i] == -w.letters[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("fpgroup") {
  TEST_CASE("parse the bundled presentations") {
    auto s = parse_presentation("a,b | aBab^2aBab^3, a^4bAb");
    CHECK(s.generator_count() == 2);
    REQUIRE(s.relators.size() == 2);
    CHECK(s.relators[0].size() == 11);
    CHECK(s.relators[1].size() == 7);

    auto q = parse_presentation("a,b | a^2bA^2ba^2BAB, a^2BA^3Ba^2b^3");
    REQUIRE(q.relators.size() == 2);
    CHECK(q.relators[0].size() == 11);
    CHECK(q.relators[1].size() == 12);

    auto w = parse_presentation("a,b | a^3b^2AB^3Ab^2, (ab)^2aB^2Ab^2AB^2");
    CHECK(w.relators[1].size() == 13);
  }

  TEST_CASE("free group and letters") {
    auto f = parse_presentation("a | ");
    CHECK(f.generator_count() == 1);
    CHECK(f.relators.empty());
    auto p = parse_presentation("a,b | ab");
    CHECK(p.relators[0].letters == std::vector<int>{1, 2});
    CHECK(p.parse_word("AB").letters == std::vector<int>{-1, -2});
  }

  TEST_CASE("exponents and groups") {
    auto p = parse_presentation("a,b | a^-2, (aB)^3, (ab)^-1");
    CHECK(p.relators[0].letters == std::vector<int>{-1, -1});
    CHECK(p.relators[1].letters == std::vector<int>{1, -2, 1, -2, 1, -2});
    CHECK(p.relators[2].letters == std::vector<int>{-2, -1});
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_presentation("a,b | ac"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a,b | a^"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a,b | aA"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a,b  ab"), ParseError);
    try {
      parse_presentation("a,b | ab, aXb");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 11);
    }
  }

  TEST_CASE("free reduction examples") {
    CHECK(free_reduce(Word{{1, -1}}).empty());
    CHECK(free_reduce(Word{{1, 2, -2, 1}}).letters == std::vector<int>{1, 1});
    auto p = parse_presentation("a,b | a^4bAb");
    CHECK(free_reduce(p.relators[0]) == p.relators[0]);
    CHECK(p.relators[0].size() == 7);
  }

  TEST_CASE("inverse and concatenation examples") {
    CHECK(word_inverse(Word{{1, 2}}).letters == std::vector<int>{-2, -1});
    CHECK(word_concat(Word{{1}}, Word{{-1}}).empty());
    auto p = parse_presentation("a,b | a^3b^2AB^3Ab^2");
    CHECK(word_inverse(word_inverse(p.relators[0])) == p.relators[0]);
  }

  TEST_CASE("property: reduction is idempotent and shortening") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      auto w = random_word(rng, 3, 30);
      auto r = free_reduce(w);
      CHECK(is_reduced(r));
      CHECK(r.size() <= w.size());
      CHECK(free_reduce(r) == r);
    }
  }

  TEST_CASE("property: u * u^-1 is the identity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      auto u = free_reduce(random_word(rng, 2, 25));
      CHECK(word_concat(u, word_inverse(u)).empty());
      CHECK(word_concat(word_inverse(u), u).empty());
    }
  }

  TEST_CASE("property: render then parse round-trips") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      Presentation p;
      p.generator_names = "abc";
      for (int k = 0; k < 3; ++k) {
        auto w = free_reduce(random_word(rng, 3, 20));
        if (!w.empty()) p.relators.push_back(w);
      }
      auto q = parse_presentation(p.render());
      CHECK(q == p);
    }
    for (const char* text : {"a,b | aBab^2aBab^3, a^4bAb", "a,b | a^2bA^2ba^2BAB, a^2BA^3Ba^2b^3"}) {
      auto p = parse_presentation(text);
      CHECK(parse_presentation(p.render()) == p);
    }
  }

  TEST_CASE("files skip comments") {
    auto p = load_presentation(COSETGEOM_DATA_DIR "/sigma257.fp");
    CHECK(p == parse_presentation("a,b | aBab^2aBab^3, a^4bAb"));
  }
}
