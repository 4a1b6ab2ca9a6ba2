#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "seqbdd/errors.hpp"
#include "seqbdd/evalkit.hpp"

using namespace seqbdd;

TEST_CASE("normalize_template canonicalizes spacing and slot markers") {
  CHECK(normalize_template("regard <slot> as") == "regard <slot> as");
  CHECK(normalize_template("  regard   <SLOT>  as ") == "regard <slot> as");
  CHECK(normalize_template("regard\t<Slot> as") == "regard <slot> as");
  CHECK(normalize_template("a <slot> <slot> b") == "a <slot> b");
  CHECK(normalize_template("<slot> <SLOT> <slot>") == "<slot>");
  CHECK(normalize_template("") == "");
  CHECK(normalize_template("   ") == "");
  // Words only fold whitespace, never case.
  CHECK(normalize_template("Regard him") == "Regard him");
}

TEST_CASE("match_template compares normalized forms") {
  CHECK(match_template("regard  <SLOT> as", "regard <slot> as"));
  CHECK(match_template("a <slot> <slot> b", "a <slot> b"));
  CHECK(!match_template("regard <slot> as", "regard <slot> of"));
  CHECK(!match_template("a", "a <slot>"));
}

TEST_CASE("mrr averages best reciprocal ranks") {
  std::vector<RankedCase> cases = {
      {{"x", "y"}, {"x"}},            // rank 1
      {{"a", "b", "c"}, {"c"}},       // rank 3
      {{"p", "q"}, {"z"}},            // no match
      {{"m", "n"}, {"n", "m"}},       // best gold match at rank 1
  };
  // (1 + 1/3 + 0 + 1) / 4 = 7/12
  CHECK(mrr(cases) == doctest::Approx(7.0 / 12.0));
  CHECK(recall(cases) == doctest::Approx(0.75));
  CHECK_THROWS_AS(mrr({}), std::invalid_argument);
  CHECK_THROWS_AS(recall({}), std::invalid_argument);
}

TEST_CASE("mrr matches through normalization") {
  std::vector<RankedCase> cases = {
      {{"wrong", "regard  <SLOT>  as"}, {"regard <slot> as"}},
  };
  CHECK(mrr(cases) == doctest::Approx(0.5));
}

TEST_CASE("prf handles boundary conditions") {
  const Prf all = prf({true, true, false}, {true, false, false});
  CHECK(all.precision == doctest::Approx(0.5));
  CHECK(all.recall == doctest::Approx(1.0));
  CHECK(all.f1 == doctest::Approx(2.0 / 3.0));

  const Prf none_predicted = prf({false, false}, {true, false});
  CHECK(none_predicted.precision == doctest::Approx(0.0));
  CHECK(none_predicted.recall == doctest::Approx(0.0));
  CHECK(none_predicted.f1 == doctest::Approx(0.0));

  const Prf none_actual = prf({true, false}, {false, false});
  CHECK(none_actual.precision == doctest::Approx(0.0));
  CHECK(none_actual.recall == doctest::Approx(0.0));
  CHECK(none_actual.f1 == doctest::Approx(0.0));

  const Prf perfect = prf({true, false, true}, {true, false, true});
  CHECK(perfect.precision == doctest::Approx(1.0));
  CHECK(perfect.recall == doctest::Approx(1.0));
  CHECK(perfect.f1 == doctest::Approx(1.0));

  CHECK_THROWS_AS(prf({true}, {true, false}), std::invalid_argument);
}

TEST_CASE("read_gold splits on blank lines") {
  std::istringstream in(
      "case1\n"
      "regard <slot> as\n"
      "treat <slot> as\n"
      "\n"
      "case2\r\n"
      "look forward to <slot>\r\n"
      "   \n"
      "\n"
      "case3\n");
  const auto cases = read_gold(in);
  REQUIRE(cases.size() == 3);
  CHECK(cases[0].id == "case1");
  CHECK(cases[0].templates ==
        std::vector<std::string>{"regard <slot> as", "treat <slot> as"});
  CHECK(cases[1].id == "case2");
  CHECK(cases[1].templates ==
        std::vector<std::string>{"look forward to <slot>"});
  CHECK(cases[2].id == "case3");
  CHECK(cases[2].templates.empty());

  std::istringstream empty("");
  CHECK(read_gold(empty).empty());
}

TEST_CASE("read_ranked_tsv takes the third column") {
  std::istringstream in(
      "1\t5\tregard <slot> as\n"
      "2\t3\tlook forward to <slot>\n");
  const auto hyps = read_ranked_tsv(in);
  REQUIRE(hyps.size() == 2);
  CHECK(hyps[0] == "regard <slot> as");
  CHECK(hyps[1] == "look forward to <slot>");

  // Template text may itself contain no further structure, but extra tabs
  // stay in the template column.
  std::istringstream tabbed("1\t5\ta\tb\n");
  CHECK(read_ranked_tsv(tabbed) == std::vector<std::string>{"a\tb"});

  std::istringstream bad("1\t5\n");
  CHECK_THROWS_AS(read_ranked_tsv(bad), ParseError);

  std::istringstream empty("");
  CHECK(read_ranked_tsv(empty).empty());
}
