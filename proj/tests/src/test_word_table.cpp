#include <doctest.h>

#include <stdexcept>

#include "seqbdd/store.hpp"
#include "seqbdd/word_table.hpp"

using namespace seqbdd;

TEST_CASE("record accumulates counts per node") {
  WordTable table;
  const NodeId v = 2;
  table.record(v, "him");
  table.record(v, "her");
  table.record(v, "him");
  CHECK(table.has_words(v));
  CHECK(table.total(v) == 3);
  CHECK(table.total_count() == 3);
  CHECK(table.words_at(v).at("him") == 2);
  CHECK(table.words_at(v).at("her") == 1);

  CHECK(!table.has_words(3));
  CHECK(table.total(3) == 0);
  CHECK(table.words_at(3).empty());
}

TEST_CASE("record rejects terminals and empty words") {
  WordTable table;
  CHECK_THROWS_AS(table.record(kZero, "x"), std::invalid_argument);
  CHECK_THROWS_AS(table.record(kOne, "x"), std::invalid_argument);
  CHECK_THROWS_AS(table.record(2, ""), std::invalid_argument);
}

TEST_CASE("rel_freq is count over node total") {
  WordTable table;
  table.record(2, "a");
  table.record(2, "a");
  table.record(2, "a");
  table.record(2, "b");
  CHECK(table.rel_freq(2, "a") == doctest::Approx(0.75));
  CHECK(table.rel_freq(2, "b") == doctest::Approx(0.25));
  CHECK(table.rel_freq(2, "c") == doctest::Approx(0.0));
  CHECK(table.rel_freq(9, "a") == doctest::Approx(0.0));
}

TEST_CASE("dominant picks the highest count, ties lexicographic") {
  WordTable table;
  table.record(2, "beta");
  table.record(2, "beta");
  table.record(2, "alpha");
  const auto d = table.dominant(2);
  CHECK(d.word == "beta");
  CHECK(d.fraction == doctest::Approx(2.0 / 3.0));

  table.record(3, "zed");
  table.record(3, "ant");
  const auto tie = table.dominant(3);
  CHECK(tie.word == "ant");
  CHECK(tie.fraction == doctest::Approx(0.5));

  CHECK_THROWS_AS(table.dominant(4), std::invalid_argument);
}

TEST_CASE("merge moves counts additively") {
  WordTable table;
  table.record(2, "x");
  table.record(2, "y");
  table.record(3, "x");
  table.record(3, "z");
  table.merge(2, 3);
  CHECK(table.words_at(2).at("x") == 2);
  CHECK(table.words_at(2).at("y") == 1);
  CHECK(table.words_at(2).at("z") == 1);
  CHECK(!table.has_words(3));
  CHECK(table.total_count() == 4);

  // Self merge is a no-op.
  table.merge(2, 2);
  CHECK(table.total(2) == 4);

  // Merging from an empty source is a no-op.
  table.merge(2, 7);
  CHECK(table.total(2) == 4);
}
