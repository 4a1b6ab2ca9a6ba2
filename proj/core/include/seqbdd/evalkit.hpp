#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace seqbdd {

/// One evaluation unit: a best-first hypothesis list against its gold set.
struct RankedCase {
  std::vector<std::string> hypotheses;
  std::vector<std::string> gold;
};

/// Canonical comparison form: whitespace runs collapse to single spaces,
/// slot markers unify to "<slot>" case-insensitively, and consecutive slot
/// tokens collapse to one.
std::string normalize_template(std::string_view s);

/// Equality after normalization.
bool match_template(std::string_view hypothesis, std::string_view gold);

/// Mean reciprocal rank: each case contributes 1/rank of its best matching
/// hypothesis, or 0 when nothing matches.
/// Throws std::invalid_argument on an empty case list.
double mrr(const std::vector<RankedCase>& cases);

/// Fraction of cases whose hypothesis list matches any gold template at any
/// rank. Throws std::invalid_argument on an empty case list.
double recall(const std::vector<RankedCase>& cases);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Precision/recall/F1 over the positive class. Zero predicted positives
/// gives precision 0; zero actual positives gives recall 0.
/// Throws std::invalid_argument on length mismatch.
Prf prf(const std::vector<bool>& predictions, const std::vector<bool>& gold);

struct GoldCase {
  std::string id;
  std::vector<std::string> templates;
};

/// Blank-line separated blocks: first line the case id, remaining lines gold
/// templates. Whitespace-only lines count as blank.
std::vector<GoldCase> read_gold(std::istream& in);

/// Hypotheses from a ranked template TSV ("rank<TAB>weight<TAB>template"),
/// best first. Lines without two tabs throw ParseError.
std::vector<std::string> read_ranked_tsv(std::istream& in);

}  // namespace seqbdd
