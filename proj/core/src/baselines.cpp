#include "seqbdd/baselines.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "seqbdd/store.hpp"

namespace seqbdd {

bool Trie::accepts(std::span<const Symbol> phrase) const {
  std::size_t s = 0;
  for (const Symbol sym : phrase) {
    auto it = states_[s].next.find(sym.id);
    if (it == states_[s].next.end()) return false;
    s = it->second;
  }
  return states_[s].accept;
}

TrieStats Trie::stats() const {
  TrieStats st;
  st.states = states_.size();
  for (const State& s : states_) st.transitions += s.next.size();
  return st;
}

Trie build_trie(std::span<const std::vector<Symbol>> phrases) {
  if (phrases.empty()) {
    throw std::invalid_argument("build_trie: empty phrase list");
  }
  Trie trie;
  for (const auto& phrase : phrases) {
    std::size_t s = 0;
    for (const Symbol sym : phrase) {
      auto [it, fresh] = trie.states_[s].next.try_emplace(sym.id, trie.states_.size());
      if (fresh) trie.states_.emplace_back();
      s = it->second;
    }
    trie.states_[s].accept = true;
  }
  return trie;
}

bool Dfa::accepts(std::span<const Symbol> phrase) const {
  std::size_t s = 0;
  for (const Symbol sym : phrase) {
    auto it = states_[s].next.find(sym.id);
    if (it == states_[s].next.end()) return false;
    s = it->second;
  }
  return states_[s].accept;
}

DfaStats Dfa::stats() const {
  DfaStats st;
  st.states = states_.size();
  for (const State& s : states_) st.transitions += s.next.size();
  return st;
}

Dfa minimize(const Trie& trie) {
  const std::size_t n = trie.states().size();
  std::vector<std::size_t> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](std::size_t s) {
    while (rep[s] != s) {
      rep[s] = rep[rep[s]];
      s = rep[s];
    }
    return s;
  };

  // Group signature: accept flag, incoming label set, outgoing map, all over
  // representatives. Whole groups collapse each round until nothing moves.
  using Key = std::tuple<bool, std::vector<std::uint32_t>,
                         std::vector<std::pair<std::uint32_t, std::size_t>>>;
  for (;;) {
    std::map<std::size_t, std::set<std::uint32_t>> incoming;
    std::map<std::size_t, std::vector<std::pair<std::uint32_t, std::size_t>>> outgoing;
    for (std::size_t s = 0; s < n; ++s) {
      if (find(s) != s) continue;
      auto& out = outgoing[s];
      for (const auto& [label, t] : trie.states()[s].next) {
        const std::size_t rt = find(t);
        if (out.empty() || out.back() != std::pair{label, rt}) {
          out.emplace_back(label, rt);
        }
        incoming[rt].insert(label);
      }
    }
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t s = 0; s < n; ++s) {
      if (find(s) != s) continue;
      const auto& in = incoming[s];
      groups[Key{trie.states()[s].accept,
                 std::vector<std::uint32_t>(in.begin(), in.end()),
                 outgoing[s]}]
          .push_back(s);
    }
    bool changed = false;
    for (const auto& [key, members] : groups) {
      for (std::size_t i = 1; i < members.size(); ++i) {
        rep[members[i]] = members.front();
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::map<std::size_t, std::size_t> index;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t r = find(s);
    index.try_emplace(r, index.size());
  }
  Dfa dfa;
  dfa.states_.assign(index.size(), {});
  for (const auto& [r, i] : index) {
    dfa.states_[i].accept = trie.states()[r].accept;
    for (const auto& [label, t] : trie.states()[r].next) {
      dfa.states_[i].next[label] = index.at(find(t));
    }
  }
  return dfa;
}

SizeReport compare_sizes(std::span<const std::vector<Symbol>> phrases,
                         SymbolTable& symbols) {
  SizeReport report;
  const Trie trie = build_trie(phrases);
  report.trie = trie.stats();
  report.dfa = minimize(trie).stats();
  const std::vector<std::vector<Symbol>> list(phrases.begin(), phrases.end());
  {
    Store store(symbols, Mode::original);
    report.seqbdd_nodes = store.node_count(store.construct(list));
  }
  {
    Store store(symbols, Mode::relaxed);
    report.relaxed_nodes = store.node_count(store.construct(list));
  }
  if (report.seqbdd_nodes > report.dfa.transitions) {
    throw std::logic_error("compare_sizes: seqbdd node count " +
                           std::to_string(report.seqbdd_nodes) +
                           " exceeds dfa transition count " +
                           std::to_string(report.dfa.transitions));
  }
  return report;
}

std::string to_csv(const SizeReport& report, std::string_view input_id) {
  std::string line(input_id);
  for (const std::size_t v :
       {report.trie.states, report.trie.transitions, report.dfa.states,
        report.dfa.transitions, report.seqbdd_nodes, report.relaxed_nodes}) {
    line.push_back(',');
    line.append(std::to_string(v));
  }
  return line;
}

}  // namespace seqbdd
