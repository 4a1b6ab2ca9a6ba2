#pragma once

// Shared test support: set-based language oracles, exhaustive membership
// sweeps, and seeded random phrase sets.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqbdd/store.hpp"

namespace seqbdd::testing {

using Phrase = std::vector<std::string>;
using Language = std::set<Phrase>;

inline Phrase chars(const std::string& s) {
  Phrase p;
  p.reserve(s.size());
  for (const char c : s) p.emplace_back(1, c);
  return p;
}

inline std::vector<Symbol> to_symbols(SymbolTable& symbols, const Phrase& phrase) {
  std::vector<Symbol> out;
  out.reserve(phrase.size());
  for (const std::string& s : phrase) out.push_back(symbols.intern(s));
  return out;
}

inline std::vector<std::vector<Symbol>> to_symbol_phrases(
    SymbolTable& symbols, const std::vector<Phrase>& phrases) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(phrases.size());
  for (const Phrase& p : phrases) out.push_back(to_symbols(symbols, p));
  return out;
}

inline Language to_language(const std::vector<Phrase>& phrases) {
  return Language(phrases.begin(), phrases.end());
}

/// The graph's full language, via enumerate, as symbol texts.
inline Language language_of(const Store& store, NodeId root,
                            std::size_t limit = 1u << 20) {
  Language out;
  for (const std::vector<Symbol>& seq : store.enumerate(root, limit)) {
    Phrase p;
    p.reserve(seq.size());
    for (const Symbol s : seq) p.emplace_back(s.text);
    out.insert(std::move(p));
  }
  return out;
}

/// Exhaustive membership sweep: contains() must agree with `expected` on
/// every string over `alphabet` up to max_len (the empty string included).
/// Returns the first disagreeing string, or nullopt-style empty vector flag
/// via the bool.
struct MembershipResult {
  bool ok = true;
  Phrase witness;
};

inline MembershipResult membership_matches(const Store& store, NodeId root,
                                           const std::vector<std::string>& alphabet,
                                           std::size_t max_len,
                                           const Language& expected) {
  SymbolTable& symbols = store.symbols();
  std::vector<Symbol> alpha;
  for (const std::string& s : alphabet) alpha.push_back(symbols.intern(s));
  std::vector<std::size_t> odo;
  for (;;) {
    Phrase text;
    std::vector<Symbol> seq;
    for (const std::size_t i : odo) {
      text.push_back(alphabet[i]);
      seq.push_back(alpha[i]);
    }
    if (store.contains(root, seq) != (expected.count(text) != 0)) {
      return {false, text};
    }
    // Odometer over lengths 0..max_len: carry by zeroing maxed digits, and
    // grow one digit when the whole length wraps.
    std::size_t pos = odo.size();
    while (pos > 0 && odo[pos - 1] + 1 == alphabet.size()) {
      odo[pos - 1] = 0;
      --pos;
    }
    if (pos > 0) {
      ++odo[pos - 1];
    } else if (odo.size() < max_len) {
      odo.assign(odo.size() + 1, 0);
    } else {
      return {true, {}};
    }
  }
}

/// Random phrase set drawn from the first `alphabet_size` lowercase letters:
/// 1..max_phrases phrases of length 1..max_len. Duplicates allowed.
inline std::vector<Phrase> random_phrase_set(std::mt19937& rng,
                                             std::size_t alphabet_size,
                                             std::size_t max_len,
                                             std::size_t max_phrases) {
  std::uniform_int_distribution<std::size_t> n_phrases(1, max_phrases);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet_size - 1);
  std::vector<Phrase> out(n_phrases(rng));
  for (Phrase& p : out) {
    p.resize(len(rng));
    for (std::string& s : p) s = std::string(1, static_cast<char>('a' + letter(rng)));
  }
  return out;
}

inline std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

}  // namespace seqbdd::testing

namespace seqbdd {

/// Test-only access to Store internals (declared friend in store.hpp).
struct StoreTestAccess {
  static Node& mutable_node(Store& store, NodeId v) { return store.nodes_[v]; }
  static const std::unordered_map<std::uint64_t, NodeId>& unique2(const Store& store) {
    return store.unique2_;
  }
};

}  // namespace seqbdd
