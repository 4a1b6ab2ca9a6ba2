#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqbdd/extract.hpp"
#include "seqbdd/store.hpp"
#include "seqbdd/word_table.hpp"

namespace seqbdd {

struct TaggedToken {
  std::string word;
  std::string tag;  // never empty
};

struct TaggedPhrase {
  std::vector<TaggedToken> tokens;  // never empty
};

/// Two accepted layouts, auto-detected by a tab in the first non-empty line:
///   - slash: one phrase per line, space-separated word/TAG tokens, the LAST
///     slash splitting word from tag ("1/2/CD" reads as word "1/2");
///   - TSV: one "word<TAB>tag" token per line, blank lines ending a phrase.
/// Throws ParseError (with line number) on malformed tokens or empty tags,
/// std::invalid_argument when the stream holds no phrases.
std::vector<TaggedPhrase> read_tagged(std::istream& in);

/// Letter-based toy inputs: one phrase per line, each character both the
/// word and the tag. Throws std::invalid_argument when empty.
std::vector<TaggedPhrase> read_chars(std::istream& in);

/// Slash layout, one phrase per line. read_tagged(write_tagged(x)) == x.
void write_tagged(const std::vector<TaggedPhrase>& phrases, std::ostream& out);

/// Keeps sentences containing all anchor words in order with at most max_gap
/// non-anchor words between consecutive anchors, emitting the suffix from
/// the first anchor onward; one result per sentence, leftmost match.
/// Throws std::invalid_argument on an empty anchor list.
std::vector<TaggedPhrase> search_phrases(const std::vector<TaggedPhrase>& corpus,
                                         const std::vector<std::string>& anchors,
                                         std::size_t max_gap);

/// Drops replies/retweets (lines starting "@" or "RT "), replaces each
/// http(s) URL through the following whitespace with the token "URL", and
/// drops lines left empty.
std::vector<std::string> clean_tweets(const std::vector<std::string>& lines);

struct RunConfig {
  Mode mode = Mode::relaxed;
  std::optional<double> theta;  // unset: 1.0 original, 0.5 relaxed
  std::uint64_t min_edge_freq = 2;
  std::size_t top_k = 20;
  std::size_t max_paths = 100000;
  bool require_slot = false;
  bool sort_inputs = true;
  std::vector<std::string> anchors;
  std::size_t max_gap = 5;

  double resolved_theta() const;
  ExtractConfig extract_config() const;
};

/// Interns each token's tag. One symbol sequence per phrase.
std::vector<std::vector<Symbol>> tag_sequences(const std::vector<TaggedPhrase>& phrases,
                                               SymbolTable& symbols);

struct BuiltGraph {
  NodeId root = kZero;
  std::vector<std::vector<Symbol>> sequences;  // parallel to the input phrases
  WordTable words;
};

/// Builds the graph in the store's mode and records each phrase position's
/// surface word at the node it lands on. sort_inputs selects the canonical
/// sorted construction; without it the graph is folded together by union in
/// the given phrase order, which in relaxed mode can change the result.
BuiltGraph build_graph(Store& store, const std::vector<TaggedPhrase>& phrases,
                       bool sort_inputs = true);

}  // namespace seqbdd
