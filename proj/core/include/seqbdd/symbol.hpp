#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace seqbdd {

/// Interned alphabet symbol. Equality is by id; ordering is lexicographic
/// byte order on the symbol text. The text view points into the owning
/// SymbolTable and stays valid for the table's lifetime.
struct Symbol {
  std::uint32_t id{0};
  std::string_view text;

  friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
  friend bool operator<(Symbol a, Symbol b) { return a.text < b.text; }
};

/// Interns symbol texts to dense ids. Storage is append-only, so handed-out
/// string_views never move.
class SymbolTable {
 public:
  /// Idempotent: the same text always yields the same Symbol.
  /// Throws std::invalid_argument on an empty token.
  Symbol intern(std::string_view text) {
    if (text.empty()) {
      throw std::invalid_argument("symbol text must be non-empty");
    }
    if (auto it = ids_.find(text); it != ids_.end()) {
      return Symbol{it->second, texts_[it->second]};
    }
    const auto id = static_cast<std::uint32_t>(texts_.size());
    texts_.emplace_back(text);
    ids_.emplace(texts_.back(), id);
    return Symbol{id, texts_.back()};
  }

  Symbol at(std::uint32_t id) const {
    if (id >= texts_.size()) {
      throw std::out_of_range("symbol id out of range");
    }
    return Symbol{id, texts_[id]};
  }

  std::size_t size() const { return texts_.size(); }

 private:
  std::deque<std::string> texts_;  // deque: stable addresses for the views
  std::unordered_map<std::string_view, std::uint32_t> ids_;
};

}  // namespace seqbdd
