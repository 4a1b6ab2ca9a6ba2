#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqbdd/symbol.hpp"

namespace seqbdd {

struct TrieStats {
  std::size_t states = 0;
  std::size_t transitions = 0;
};

struct DfaStats {
  std::size_t states = 0;
  std::size_t transitions = 0;
};

/// Edge-labeled prefix tree. State 0 is the root.
class Trie {
 public:
  struct State {
    std::map<std::uint32_t, std::size_t> next;  // symbol id -> state
    bool accept = false;
  };

  const std::vector<State>& states() const { return states_; }
  bool accepts(std::span<const Symbol> phrase) const;
  TrieStats stats() const;

 private:
  friend Trie build_trie(std::span<const std::vector<Symbol>> phrases);
  std::vector<State> states_{1};
};

/// Throws std::invalid_argument on an empty phrase list.
Trie build_trie(std::span<const std::vector<Symbol>> phrases);

/// Deterministic acyclic automaton produced by contracting a trie.
class Dfa {
 public:
  struct State {
    std::map<std::uint32_t, std::size_t> next;
    bool accept = false;
  };

  const std::vector<State>& states() const { return states_; }
  bool accepts(std::span<const Symbol> phrase) const;
  DfaStats stats() const;

 private:
  friend Dfa minimize(const Trie& trie);
  std::vector<State> states_{1};
};

/// Contracts the trie to a fixpoint: states merge when their accept flags,
/// incoming label sets, and outgoing label-to-successor maps all agree, with
/// every such group collapsed simultaneously per round. Merged states always
/// share a right language, so the language is preserved. The incoming-label
/// condition can leave the result slightly above the Nerode minimum; the
/// transition count is the size metric of record.
Dfa minimize(const Trie& trie);

struct SizeReport {
  TrieStats trie;
  DfaStats dfa;
  std::size_t seqbdd_nodes = 0;
  std::size_t relaxed_nodes = 0;
};

/// Builds all four structures over the same phrases. Throws std::logic_error
/// if the seqbdd node count exceeds the DFA transition count, which the
/// sharing argument rules out.
SizeReport compare_sizes(std::span<const std::vector<Symbol>> phrases,
                         SymbolTable& symbols);

/// Single CSV line: input-id, trie_states, trie_transitions, dfa_states,
/// dfa_transitions, seqbdd_nodes, relaxed_nodes. No trailing newline.
std::string to_csv(const SizeReport& report, std::string_view input_id);

}  // namespace seqbdd
