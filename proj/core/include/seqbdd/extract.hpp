#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqbdd/store.hpp"
#include "seqbdd/word_table.hpp"

namespace seqbdd {

/// The graph with 0-edges dissolved: node ids are Store node ids, and an
/// edge u -> v exists iff v sits on the lo-chain hanging off u's hi edge.
/// Entry nodes are the non-terminals on the root's own lo-chain.
struct FlatDag {
  struct NodeInfo {
    Symbol symbol;
    std::vector<NodeId> succ;      // ascending symbol order
    std::uint64_t entries = 0;     // phrase traces starting at this node
    std::uint64_t accepts = 0;     // phrase traces ending at this node
    bool accepting = false;        // hi lo-chain terminates at kOne
  };

  std::vector<NodeId> roots;                         // chain order
  std::vector<NodeId> order;                         // deterministic traversal order
  std::unordered_map<NodeId, NodeInfo> info;
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> edges;

  const NodeInfo& at(NodeId v) const { return info.at(v); }
  std::uint64_t edge_weight(NodeId u, NodeId v) const;
};

FlatDag flatten(const Store& store, NodeId root);

/// Nodes visited by one phrase, one per symbol.
/// Throws TracingError when the phrase cannot be traced to an accepting node.
std::vector<NodeId> trace_phrase(const FlatDag& dag, std::span<const Symbol> phrase);

/// Adds each phrase's traversal to the dag: +1 on every traversed edge, +1
/// entry on the first node, +1 accept on the last.
void weight_edges(FlatDag& dag, std::span<const std::vector<Symbol>> phrases);

/// Drops edges lighter than min_edge_freq, then nodes no longer reachable
/// from any entry node.
FlatDag prune(const FlatDag& dag, std::uint64_t min_edge_freq);

struct PathCandidate {
  std::vector<NodeId> nodes;
  std::uint64_t weight;  // min traversed edge weight; accept count for single nodes
};

/// Every path from an entry node to a node with a nonzero accept count, in
/// depth-first order (roots in chain order, successors in stored order).
/// Throws CapacityError when more than max_paths paths exist.
std::vector<PathCandidate> enumerate_paths(const FlatDag& dag, std::size_t max_paths);

struct TemplateElement {
  enum class Kind { lexical, slot };
  Kind kind;
  std::string word;  // empty for slots
};

struct Template {
  std::vector<TemplateElement> elements;
  std::uint64_t weight = 0;
};

/// "word word <slot> word" rendering.
std::string render(const Template& t);

/// Labels each path node lexical or slot. A node is lexical when its word
/// distribution is unanimous, or when the dominant fraction strictly exceeds
/// theta; otherwise it becomes a slot.
/// Throws std::invalid_argument when a path node has no recorded words.
Template label_slots(const FlatDag& dag, const PathCandidate& path,
                     const WordTable& words, double theta);

/// Collapses runs of consecutive slots, merges identical templates by
/// summing weights, and sorts by descending weight, ties by ascending
/// rendered text.
std::vector<Template> merge_templates(std::vector<Template> templates);

struct ExtractConfig {
  double theta = 0.5;                  // lexical threshold, in (0, 1]
  std::uint64_t min_edge_freq = 2;
  std::size_t top_k = 20;
  std::size_t max_paths = 100000;
  bool require_slot = false;
};

/// Full pipeline over a built graph whose words have been recorded:
/// flatten, weight, prune, enumerate, label, merge, truncate to top_k, and
/// optionally drop templates without a slot.
std::vector<Template> extract(const Store& store, NodeId root,
                              std::span<const std::vector<Symbol>> phrases,
                              const WordTable& words, const ExtractConfig& config);

}  // namespace seqbdd
