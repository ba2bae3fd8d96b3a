#include "amal/word.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace amal;

namespace {
const std::string kExample26 =
    "x2^2 x3^-3 x1^-2 x3^4 x2^5 x3^-2 x2^4 x3^2 x1^2 x2^4 x3^4 x2^2 D^-3";
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce({{0, 1}, {0, -1}}).empty());
  CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) ==
        std::vector<Letter>{{0, 1}, {0, 1}});
  const std::vector<Letter> reduced{{0, 1}, {1, -1}, {0, 1}};
  CHECK(free_reduce(reduced) == reduced);
}

TEST_CASE("free_reduce output has no adjacent inverse pair") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Presentation pres = testing::random_presentation(rng);
    const auto w = free_reduce(testing::random_letters(rng, pres));
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      REQUIRE(!(w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign));
  }
}

TEST_CASE("to_lambda on the worked G(3,6,7) word") {
  const Presentation pres({3, 6, 7});
  const SyllableWord lam = to_lambda(pres, parse_letters(pres, kExample26));
  CHECK(lam.delta_pow() == -3);
  const ParsedWord expect = parse_word(kExample26, 3);
  CHECK(lam.syllables() == expect.syllables);
}

TEST_CASE("to_lambda trivial cases") {
  const Presentation p22({2, 2});
  CHECK(to_lambda(p22, std::vector<Letter>{}).is_identity());
  const SyllableWord sq = to_lambda(p22, std::vector<Letter>{{0, 1}, {0, 1}});
  CHECK(sq.syllables().empty());
  CHECK(sq.delta_pow() == 1);
}

TEST_CASE("to_lambda satisfies the lambda-form bounds") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const Presentation pres = testing::random_presentation(rng);
    const auto letters = testing::random_letters(rng, pres);
    const SyllableWord lam = to_lambda(pres, letters);
    for (const auto& s : lam.syllables()) {
      REQUIRE(s.exp != 0);
      REQUIRE(std::abs(s.exp) <= pres.p(s.gen) - 1);
    }
    REQUIRE(word_length(pres, lam) <= static_cast<std::int64_t>(letters.size()));
  }
}

TEST_CASE("syllable word invariants are enforced") {
  CHECK_THROWS_AS(SyllableWord({{0, 1}, {0, 2}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(SyllableWord({{0, 0}}, 0), std::invalid_argument);
  CHECK(SyllableWord({}, 3).syllables().empty());
}

TEST_CASE("word text syntax round trip") {
  const Presentation pres({3, 6, 7});
  std::mt19937 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const SyllableWord lam = to_lambda(pres, testing::random_letters(rng, pres));
    const std::string text = format_word(lam);
    const ParsedWord back = parse_word(text, pres.n());
    if (lam.is_identity())
      CHECK(text == "1");
    else
      CHECK(SyllableWord(back.syllables, back.delta_pow) == lam);
  }
}

TEST_CASE("parse_word error paths") {
  CHECK_THROWS_AS(parse_word("x9", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("y1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x1^", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x1^2x2", 3), std::invalid_argument);
  CHECK_NOTHROW(parse_word("x1^-2 D^-3  x2", 3));
  CHECK(parse_word("", 3).syllables.empty());
}

TEST_CASE("inverse_word reverses and negates") {
  const SyllableWord w({{0, 2}, {1, -3}}, 4);
  const SyllableWord iw = inverse_word(w);
  CHECK(iw.delta_pow() == -4);
  CHECK(iw.syllables() == std::vector<Syllable>{{1, 3}, {0, -2}});
  CHECK(inverse_word(iw) == w);
}
