#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

#include "seqbdd/symbol.hpp"

namespace seqbdd {

using NodeId = std::uint32_t;

/// 0-terminal: the empty language.
inline constexpr NodeId kZero = 0;
/// 1-terminal: the language containing only the empty sequence.
inline constexpr NodeId kOne = 1;

inline bool is_terminal(NodeId v) { return v <= kOne; }

/// A non-terminal holds one symbol and two ordered children. Following the
/// 1-edge (hi) emits `top`; following the 0-edge (lo) moves to the next
/// alternative symbol at the same sequence position. The symbols along any
/// lo-chain are strictly ascending, and a lo-chain ending at the 1-terminal
/// additionally accepts the empty continuation.
struct Node {
  Symbol top;
  NodeId lo;
  NodeId hi;
};

enum class Mode {
  original,  ///< canonical: nodes shared on <top, lo, hi>
  relaxed,   ///< nodes shared on <top, lo>; colliding hi edges are unioned
};

/// Arena of sequence-BDD nodes plus the unique tables that drive sharing.
///
/// A Store is built by a single writer; after construction completes, all
/// query operations (contains, enumerate, counts, walk, to_dot) are const and
/// may run concurrently. In relaxed mode construction may mutate the hi edge
/// of an existing node; every such mutation invalidates the internal union
/// memo, and no other cache outlives a call.
class Store {
 public:
  Store(SymbolTable& symbols, Mode mode) : symbols_(symbols), mode_(mode) {
    nodes_.resize(2);  // slots for the two terminals; never dereferenced
  }

  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  Mode mode() const { return mode_; }
  SymbolTable& symbols() const { return symbols_; }

  /// Number of arena slots including the two terminals.
  std::size_t size() const { return nodes_.size(); }

  const Node& node(NodeId v) const;

  /// Creates a raw, unregistered node. Used for unreduced trees; reduction
  /// canonicalizes them through get_node.
  NodeId make_node(Symbol top, NodeId lo, NodeId hi);

  /// Reducing constructor. Applies zero-suppression (hi == kZero collapses to
  /// lo), then shares through the mode's unique table. In relaxed mode a
  /// <top, lo> hit merges the requested hi into the existing node by union,
  /// unless doing so would create a cycle.
  NodeId get_node(Symbol top, NodeId lo, NodeId hi);

  /// Bottom-up reduction of an arbitrary acyclic graph, memoized on input
  /// node id. Children are reduced lo first, then hi.
  /// Throws StructureError on a cyclic input.
  NodeId reduce(NodeId root);

  /// Language union. Exact in original mode. In relaxed mode the result may
  /// denote a superset, because get_node may merge into existing nodes.
  NodeId unite(NodeId p, NodeId q);

  /// Single-sequence graph: nested get_node(sym, kZero, rest).
  /// Throws std::invalid_argument on an empty phrase.
  NodeId chain(std::span<const Symbol> phrase);

  /// Tree-shaped unreduced graph for the distinct phrases: one lo-chain per
  /// position in ascending symbol order, terminated by kOne when the residual
  /// set accepts the empty continuation, else kZero. Independent of input
  /// order. Throws std::invalid_argument on an empty list or empty phrase.
  NodeId build_unreduced(const std::vector<std::vector<Symbol>>& phrases);

  /// reduce(build_unreduced(phrases)) under this store's mode. In original
  /// mode the result is the canonical minimal graph for exactly the input
  /// set; in relaxed mode it accepts a superset.
  NodeId construct(const std::vector<std::vector<Symbol>>& phrases);

  /// Left fold of unite over chain(phrase). In original mode this yields the
  /// same canonical node as construct().
  NodeId construct_incremental(const std::vector<std::vector<Symbol>>& phrases);

  /// Membership test. The empty sequence is accepted iff the root's lo-chain
  /// terminates at kOne.
  bool contains(NodeId root, std::span<const Symbol> seq) const;

  /// Nodes visited by tracing `seq` from `root`, one per symbol, plus whether
  /// the sequence is accepted. `visited` is meaningful only when `matched`
  /// (every symbol found a chain node).
  struct Walk {
    std::vector<NodeId> visited;
    bool matched = false;
    bool accepted = false;
  };
  Walk walk(NodeId root, std::span<const Symbol> seq) const;

  /// Accepted sequences in ascending lexicographic order, truncated at
  /// `limit`. Throws StructureError on a cyclic graph.
  std::vector<std::vector<Symbol>> enumerate(NodeId root, std::size_t limit) const;

  /// Number of accepted sequences.
  std::uint64_t count_sequences(NodeId root) const;

  /// Number of distinct non-terminal nodes reachable from root.
  std::size_t node_count(NodeId root) const;

  /// True iff `to` is reachable from `from` following either edge kind.
  /// Every node reaches itself.
  bool reaches(NodeId from, NodeId to) const;

  /// True iff the graph reachable from root has no directed cycle.
  bool is_acyclic(NodeId root) const;

  /// Graphviz rendering: solid 1-edges, dashed 0-edges, boxed terminals
  /// labeled "0" / "1".
  void to_dot(NodeId root, std::ostream& os) const;

 private:
  friend struct StoreTestAccess;

  NodeId get_node_original(Symbol top, NodeId lo, NodeId hi);
  NodeId get_node_relaxed(Symbol top, NodeId lo, NodeId hi);
  NodeId canonicalize(NodeId root);
  bool accepts_empty(NodeId v) const;
  bool union_epsilon_safe(NodeId p, NodeId q) const;
  NodeId unite_rec(NodeId p, NodeId q, unsigned depth);
  NodeId reduce_rec(NodeId v, std::unordered_map<NodeId, NodeId>& memo,
                    std::vector<NodeId>& stack);

  struct TripleKey {
    std::uint32_t top;
    NodeId lo;
    NodeId hi;
    bool operator==(const TripleKey&) const = default;
  };
  struct TripleHash {
    std::size_t operator()(const TripleKey& k) const;
  };

  static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  SymbolTable& symbols_;
  Mode mode_;
  std::vector<Node> nodes_;
  // Original mode shares on the full triple. Relaxed mode shares on
  // <top, lo> and uses the triple table only for shares its cycle guard
  // rejected.
  std::unordered_map<TripleKey, NodeId, TripleHash> unique3_;
  std::unordered_map<std::uint64_t, NodeId> unique2_;
  std::unordered_map<std::uint64_t, NodeId> union_memo_;
  bool merge_active_ = false;  // a hi-merge union is on the stack
};

}  // namespace seqbdd
