#include <doctest.h>

#include <random>
#include <set>

#include "ncnn/core.hpp"
#include "ncnn/enumerate.hpp"
#include "ncnn/errors.hpp"
#include "ncnn/patterns.hpp"
#include "oracles.hpp"

using namespace ncnn;

namespace {

std::vector<Arc> arcs_of(const Matching& m) { return {m.arcs().begin(), m.arcs().end()}; }

DyckWord steps(std::string_view text) { return DyckWord::parse(text); }

}  // namespace

TEST_CASE("word_to_matching reads arcs off label positions") {
  CHECK(arcs_of(word_to_matching(parse_word("1221"))) == std::vector<Arc>{{1, 4, 1}, {2, 3, 2}});
  CHECK(arcs_of(word_to_matching(parse_word("121632653454"))) ==
        std::vector<Arc>{{1, 3, 1}, {2, 6, 2}, {4, 7, 6}, {5, 9, 3}, {8, 11, 5}, {10, 12, 4}});
  CHECK(word_to_matching(Word{}).semilength() == 0);
}

TEST_CASE("matching_to_word inverts the arc reading") {
  CHECK(format_word(matching_to_word(Matching::from_arcs({{1, 2, 1}}))) == "1,1");
  CHECK(matching_to_word(Matching::from_arcs({{1, 4, 1}, {2, 3, 2}})) == parse_word("1221"));
  CHECK(matching_to_word(Matching::from_arcs({{1, 3, 1}, {2, 4, 2}})) == parse_word("1212"));
  CHECK(matching_to_word(Matching{}).empty());
}

TEST_CASE("malformed words and matchings are rejected") {
  CHECK_THROWS_AS(parse_word("1123"), ValidationError);
  CHECK_THROWS_AS(parse_word("121"), ValidationError);
  CHECK_THROWS_AS(parse_word("1,1,3,3"), ValidationError);
  CHECK_THROWS_AS(parse_word("1,,1"), ValidationError);
  CHECK_THROWS_AS(Word::from_entries({1, 1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Matching::from_arcs({{1, 3, 1}, {3, 4, 2}}), ValidationError);  // shared endpoint
  CHECK_THROWS_AS(Matching::from_arcs({{1, 2, 1}, {3, 4, 1}}), ValidationError);  // repeated label
  CHECK_THROWS_AS(Matching::from_arcs({{2, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(Matching::from_arcs({{1, 5, 1}, {2, 3, 2}}), ValidationError);  // position > 2n
}

TEST_CASE("word text forms") {
  const Word w = parse_word("10,1,1,2,2,3,3,4,4,5,5,6,6,7,7,8,8,9,9,10");
  CHECK(w.semilength() == 10);
  CHECK(w.at(1) == 10);
  CHECK(parse_word(format_word(w)) == w);
  CHECK(format_word(parse_word("2112")) == "2,1,1,2");
  CHECK(parse_word(" 1, 1 ") == parse_word("11"));
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(w.at(0), ValidationError);
  CHECK_THROWS_AS(w.at(21), ValidationError);
}

TEST_CASE("dyck_to_matching pairs by stack or queue") {
  const std::vector<int> id2{1, 2};
  CHECK(matching_to_word(dyck_to_matching(steps("(())"), Pairing::Stack, id2)) == parse_word("1221"));
  CHECK(matching_to_word(dyck_to_matching(steps("(())"), Pairing::Queue, id2)) == parse_word("1212"));
  CHECK(matching_to_word(dyck_to_matching(steps("()()"), Pairing::Stack, id2)) == parse_word("1122"));
  CHECK(matching_to_word(dyck_to_matching(steps("()()"), Pairing::Queue, id2)) == parse_word("1122"));
  const std::vector<int> swapped{2, 1};
  CHECK(matching_to_word(dyck_to_matching(steps("(())"), Pairing::Stack, swapped)) == parse_word("2112"));
}

TEST_CASE("dyck_to_matching validates the labeling") {
  const std::vector<int> short_labeling{1};
  const std::vector<int> repeated{1, 1};
  CHECK_THROWS_AS(dyck_to_matching(steps("(())"), Pairing::Stack, short_labeling), ValidationError);
  CHECK_THROWS_AS(dyck_to_matching(steps("(())"), Pairing::Stack, repeated), ValidationError);
  CHECK_THROWS_AS(DyckWord::parse("())("), ValidationError);
  CHECK_THROWS_AS(DyckWord::parse("(("), ValidationError);
  CHECK_THROWS_AS(DyckWord::parse("(x)"), ValidationError);
}

TEST_CASE("property: word <-> matching round trip on random words") {
  std::mt19937 rng(20240501);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 12);
    const Word w = Word::from_entries(oracle::random_word(n, rng));
    const Matching m = word_to_matching(w);
    CHECK(matching_to_word(m) == w);
    CHECK(word_to_matching(matching_to_word(m)) == m);
    for (const Arc& arc : m.arcs()) {
      CHECK(arc.opener < arc.closer);
      CHECK(w.at(arc.opener) == arc.label);
      CHECK(w.at(arc.closer) == arc.label);
    }
  }
}

TEST_CASE("property: stack words never cross, queue words never nest") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const DyckWord& d : dyck_words(n)) {
      std::vector<int> labeling(n);
      for (std::size_t k = 0; k < n; ++k) labeling[k] = static_cast<int>(k + 1);
      do {
        const Word stack = matching_to_word(dyck_to_matching(d, Pairing::Stack, labeling));
        const Word queue = matching_to_word(dyck_to_matching(d, Pairing::Queue, labeling));
        REQUIRE(avoids_all(stack, crossing_patterns()));
        REQUIRE(avoids_all(queue, nesting_patterns()));
      } while (std::next_permutation(labeling.begin(), labeling.end()));
    }
  }
}

TEST_CASE("property: (Dyck word, labeling) -> word is injective with n! * C(n) images") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (Pairing pairing : {Pairing::Stack, Pairing::Queue}) {
      std::set<Word> images;
      std::size_t produced = 0;
      for (const DyckWord& d : dyck_words(n)) {
        std::vector<int> labeling(n);
        for (std::size_t k = 0; k < n; ++k) labeling[k] = static_cast<int>(k + 1);
        do {
          images.insert(matching_to_word(dyck_to_matching(d, pairing, labeling)));
          ++produced;
        } while (std::next_permutation(labeling.begin(), labeling.end()));
      }
      const auto expected = oracle::factorial(static_cast<int>(n)) * oracle::catalan(static_cast<int>(n));
      CHECK(produced == expected);
      CHECK(images.size() == expected);
    }
  }
}
