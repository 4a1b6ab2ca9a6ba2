#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include "seqbdd/store.hpp"

namespace seqbdd {

/// Per-node surface-word multisets, kept alongside a Store. A graph node
/// represents one tag position shared by many phrases; the table records
/// which concrete words occupied that position and how often.
class WordTable {
 public:
  using Counts = std::map<std::string, std::uint64_t, std::less<>>;

  /// Adds one occurrence of `word` at node `u`.
  /// Throws std::invalid_argument for a terminal id or an empty word.
  void record(NodeId u, std::string_view word);

  /// Moves all of src's counts into dst (additive); src ends up empty.
  /// No-op when dst == src.
  void merge(NodeId dst, NodeId src);

  /// count(u, word) / total(u); 0 when the node has no words.
  double rel_freq(NodeId u, std::string_view word) const;

  struct Dominant {
    std::string word;
    double fraction;
  };
  /// Highest-frequency word at u; ties break to the lexicographically
  /// smallest word. Throws std::invalid_argument when u has no words.
  Dominant dominant(NodeId u) const;

  bool has_words(NodeId u) const;
  std::uint64_t total(NodeId u) const;
  const Counts& words_at(NodeId u) const;

  /// Sum of all counts across all nodes; equals the number of recorded
  /// phrase positions.
  std::uint64_t total_count() const { return total_count_; }

 private:
  std::unordered_map<NodeId, Counts> entries_;
  std::uint64_t total_count_ = 0;
};

}  // namespace seqbdd
