#include "seqbdd/word_table.hpp"

#include <stdexcept>

namespace seqbdd {

namespace {
const WordTable::Counts kEmpty{};
}

void WordTable::record(NodeId u, std::string_view word) {
  if (is_terminal(u)) {
    throw std::invalid_argument("record: words attach to non-terminal nodes");
  }
  if (word.empty()) {
    throw std::invalid_argument("record: empty word");
  }
  auto& counts = entries_[u];
  auto it = counts.find(word);
  if (it == counts.end()) {
    counts.emplace(std::string(word), 1);
  } else {
    ++it->second;
  }
  ++total_count_;
}

void WordTable::merge(NodeId dst, NodeId src) {
  if (is_terminal(dst) || is_terminal(src)) {
    throw std::invalid_argument("merge: terminal node id");
  }
  if (dst == src) return;
  auto sit = entries_.find(src);
  if (sit == entries_.end()) return;
  auto& d = entries_[dst];
  for (auto& [word, n] : sit->second) {
    d[word] += n;
  }
  entries_.erase(sit);
}

double WordTable::rel_freq(NodeId u, std::string_view word) const {
  auto it = entries_.find(u);
  if (it == entries_.end()) return 0.0;
  std::uint64_t total = 0;
  for (const auto& [w, n] : it->second) total += n;
  auto wit = it->second.find(word);
  if (wit == it->second.end() || total == 0) return 0.0;
  return static_cast<double>(wit->second) / static_cast<double>(total);
}

WordTable::Dominant WordTable::dominant(NodeId u) const {
  auto it = entries_.find(u);
  if (it == entries_.end() || it->second.empty()) {
    throw std::invalid_argument("dominant: node has no recorded words");
  }
  std::uint64_t total = 0;
  for (const auto& [w, n] : it->second) total += n;
  const std::string* best = nullptr;
  std::uint64_t best_n = 0;
  // Map iteration is ascending, so ties keep the lexicographically smallest.
  for (const auto& [w, n] : it->second) {
    if (n > best_n) {
      best = &w;
      best_n = n;
    }
  }
  return Dominant{*best, static_cast<double>(best_n) / static_cast<double>(total)};
}

bool WordTable::has_words(NodeId u) const {
  auto it = entries_.find(u);
  return it != entries_.end() && !it->second.empty();
}

std::uint64_t WordTable::total(NodeId u) const {
  auto it = entries_.find(u);
  if (it == entries_.end()) return 0;
  std::uint64_t total = 0;
  for (const auto& [w, n] : it->second) total += n;
  return total;
}

const WordTable::Counts& WordTable::words_at(NodeId u) const {
  auto it = entries_.find(u);
  return it == entries_.end() ? kEmpty : it->second;
}

}  // namespace seqbdd
