#include "seqbdd/store.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "seqbdd/errors.hpp"

namespace seqbdd {

namespace {

// Deep recursion only tracks graph depth, which is bounded by phrase length
// at every call site; this cap catches runaway recursion through a store
// corrupted by concurrent writes.
constexpr unsigned kMaxUnionDepth = 1u << 16;

// Lo-chains are strictly ascending, so a chain scan can stop at the first
// symbol ordered after the probe.
}  // namespace

std::size_t Store::TripleHash::operator()(const TripleKey& k) const {
  std::uint64_t h = k.top;
  h = h * 0x9e3779b97f4a7c15ULL ^ k.lo;
  h = h * 0x9e3779b97f4a7c15ULL ^ k.hi;
  return static_cast<std::size_t>(h ^ (h >> 32));
}

const Node& Store::node(NodeId v) const {
  if (is_terminal(v) || v >= nodes_.size()) {
    throw std::out_of_range("not a non-terminal node id");
  }
  return nodes_[v];
}

NodeId Store::make_node(Symbol top, NodeId lo, NodeId hi) {
  if (nodes_.size() > std::numeric_limits<NodeId>::max()) {
    throw CapacityError("node arena exhausted");
  }
  nodes_.push_back(Node{top, lo, hi});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId Store::get_node(Symbol top, NodeId lo, NodeId hi) {
  if (hi == kZero) {
    return lo;  // zero-suppression
  }
  return mode_ == Mode::original ? get_node_original(top, lo, hi)
                                 : get_node_relaxed(top, lo, hi);
}

NodeId Store::get_node_original(Symbol top, NodeId lo, NodeId hi) {
  const TripleKey key{top.id, lo, hi};
  if (auto it = unique3_.find(key); it != unique3_.end()) {
    return it->second;
  }
  const NodeId v = make_node(top, lo, hi);
  unique3_.emplace(key, v);
  return v;
}

NodeId Store::reduce(NodeId root) {
  std::unordered_map<NodeId, NodeId> memo;
  std::vector<NodeId> stack;
  return reduce_rec(root, memo, stack);
}

NodeId Store::reduce_rec(NodeId v, std::unordered_map<NodeId, NodeId>& memo,
                         std::vector<NodeId>& stack) {
  if (is_terminal(v)) {
    return v;
  }
  if (auto it = memo.find(v); it != memo.end()) {
    return it->second;
  }
  if (std::find(stack.begin(), stack.end(), v) != stack.end()) {
    throw StructureError("reduce: input graph is cyclic");
  }
  stack.push_back(v);
  const Node n = node(v);  // by value: the arena may grow below
  const NodeId lo = reduce_rec(n.lo, memo, stack);
  const NodeId hi = reduce_rec(n.hi, memo, stack);
  const NodeId r = get_node(n.top, lo, hi);
  stack.pop_back();
  memo.emplace(v, r);
  return r;
}

NodeId Store::unite(NodeId p, NodeId q) { return unite_rec(p, q, 0); }

NodeId Store::unite_rec(NodeId p, NodeId q, unsigned depth) {
  if (depth > kMaxUnionDepth) {
    throw StructureError("unite: recursion depth exceeded");
  }
  if (p == kZero) return q;
  if (q == kZero) return p;
  if (p == q) return p;
  const std::uint64_t key = pack(p, q);
  if (auto it = union_memo_.find(key); it != union_memo_.end()) {
    return it->second;
  }
  NodeId w;
  if (p == kOne) {
    // The empty sequence joins q's lo-chain: kOne orders after every symbol.
    const Node nq = node(q);
    w = get_node(nq.top, unite_rec(p, nq.lo, depth + 1), nq.hi);
  } else if (q == kOne) {
    const Node np = node(p);
    w = get_node(np.top, unite_rec(np.lo, q, depth + 1), np.hi);
  } else {
    const Node np = node(p);
    const Node nq = node(q);
    if (np.top == nq.top) {
      const NodeId lo = unite_rec(np.lo, nq.lo, depth + 1);
      const NodeId hi = unite_rec(np.hi, nq.hi, depth + 1);
      w = get_node(np.top, lo, hi);
    } else if (np.top < nq.top) {
      w = get_node(np.top, unite_rec(np.lo, q, depth + 1), np.hi);
    } else {
      w = get_node(nq.top, unite_rec(p, nq.lo, depth + 1), nq.hi);
    }
  }
  union_memo_.emplace(pack(p, q), w);
  return w;
}

NodeId Store::chain(std::span<const Symbol> phrase) {
  if (phrase.empty()) {
    throw std::invalid_argument("chain: empty phrase");
  }
  NodeId acc = kOne;
  for (auto it = phrase.rbegin(); it != phrase.rend(); ++it) {
    acc = get_node(*it, kZero, acc);
  }
  return acc;
}

namespace {

using Rows = std::vector<const std::vector<Symbol>*>;

NodeId build_tree(Store& store, const Rows& rows, std::size_t lo_row,
                  std::size_t hi_row, std::size_t depth) {
  // Rows are sorted; rows of length == depth (at most one, since rows are
  // distinct) accept the empty continuation here.
  std::size_t first = lo_row;
  bool eps = false;
  if (first < hi_row && (*rows[first]).size() == depth) {
    eps = true;
    ++first;
  }
  // Group the remaining rows by the symbol at `depth`; groups are contiguous.
  struct Group {
    Symbol sym;
    std::size_t begin, end;
  };
  std::vector<Group> groups;
  for (std::size_t i = first; i < hi_row;) {
    const Symbol s = (*rows[i])[depth];
    std::size_t j = i + 1;
    while (j < hi_row && (*rows[j])[depth] == s) ++j;
    groups.push_back(Group{s, i, j});
    i = j;
  }
  NodeId acc = eps ? kOne : kZero;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const NodeId sub = build_tree(store, rows, it->begin, it->end, depth + 1);
    acc = store.make_node(it->sym, acc, sub);
  }
  return acc;
}

}  // namespace

NodeId Store::build_unreduced(const std::vector<std::vector<Symbol>>& phrases) {
  if (phrases.empty()) {
    throw std::invalid_argument("build_unreduced: empty phrase list");
  }
  Rows rows;
  rows.reserve(phrases.size());
  for (const auto& p : phrases) {
    if (p.empty()) {
      throw std::invalid_argument("build_unreduced: empty phrase");
    }
    rows.push_back(&p);
  }
  auto text_less = [](const std::vector<Symbol>* a, const std::vector<Symbol>* b) {
    return std::lexicographical_compare(a->begin(), a->end(), b->begin(), b->end());
  };
  std::sort(rows.begin(), rows.end(), text_less);
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const std::vector<Symbol>* a, const std::vector<Symbol>* b) {
                           return *a == *b;
                         }),
             rows.end());
  return build_tree(*this, rows, 0, rows.size(), 0);
}

NodeId Store::construct(const std::vector<std::vector<Symbol>>& phrases) {
  const NodeId root = reduce(build_unreduced(phrases));
  return mode_ == Mode::relaxed ? canonicalize(root) : root;
}

NodeId Store::construct_incremental(const std::vector<std::vector<Symbol>>& phrases) {
  if (phrases.empty()) {
    throw std::invalid_argument("construct_incremental: empty phrase list");
  }
  NodeId acc = kZero;
  for (const auto& p : phrases) {
    acc = unite(acc, chain(p));
  }
  return mode_ == Mode::relaxed ? canonicalize(acc) : acc;
}

bool Store::contains(NodeId root, std::span<const Symbol> seq) const {
  NodeId cur = root;
  for (const Symbol s : seq) {
    while (!is_terminal(cur) && nodes_[cur].top < s) {
      cur = nodes_[cur].lo;
    }
    if (is_terminal(cur) || nodes_[cur].top != s) {
      return false;
    }
    cur = nodes_[cur].hi;
  }
  while (!is_terminal(cur)) {
    cur = nodes_[cur].lo;
  }
  return cur == kOne;
}

Store::Walk Store::walk(NodeId root, std::span<const Symbol> seq) const {
  Walk w;
  w.visited.reserve(seq.size());
  NodeId cur = root;
  for (const Symbol s : seq) {
    while (!is_terminal(cur) && nodes_[cur].top < s) {
      cur = nodes_[cur].lo;
    }
    if (is_terminal(cur) || nodes_[cur].top != s) {
      return w;  // matched stays false
    }
    w.visited.push_back(cur);
    cur = nodes_[cur].hi;
  }
  w.matched = true;
  while (!is_terminal(cur)) {
    cur = nodes_[cur].lo;
  }
  w.accepted = (cur == kOne);
  return w;
}

namespace {

struct Enumerator {
  const Store& store;
  std::size_t limit;
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> prefix;

  // Emits the language of the lo-chain starting at v, in lexicographic
  // order: the empty continuation (chain ending at kOne) sorts first, then
  // chain entries in ascending symbol order. Returns false once the limit
  // is reached.
  bool emit(NodeId v) {
    if (out.size() == limit) return false;
    std::vector<NodeId> chain_nodes;
    NodeId cur = v;
    while (!is_terminal(cur)) {
      chain_nodes.push_back(cur);
      if (chain_nodes.size() > store.size()) {
        throw StructureError("enumerate: graph is cyclic");
      }
      cur = store.node(cur).lo;
    }
    if (cur == kOne) {
      out.push_back(prefix);
    }
    for (const NodeId n : chain_nodes) {
      prefix.push_back(store.node(n).top);
      if (!emit(store.node(n).hi)) return false;
      prefix.pop_back();
    }
    return true;
  }
};

}  // namespace

std::vector<std::vector<Symbol>> Store::enumerate(NodeId root, std::size_t limit) const {
  Enumerator e{*this, limit, {}, {}};
  if (limit > 0) {
    e.emit(root);
  }
  return std::move(e.out);
}

std::uint64_t Store::count_sequences(NodeId root) const {
  std::unordered_map<NodeId, std::uint64_t> memo;
  std::vector<NodeId> stack;
  std::function<std::uint64_t(NodeId)> rec = [&](NodeId v) -> std::uint64_t {
    if (v == kZero) return 0;
    if (v == kOne) return 1;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    if (std::find(stack.begin(), stack.end(), v) != stack.end()) {
      throw StructureError("count_sequences: graph is cyclic");
    }
    stack.push_back(v);
    const Node n = node(v);
    const std::uint64_t c = rec(n.lo) + rec(n.hi);
    stack.pop_back();
    memo.emplace(v, c);
    return c;
  };
  return rec(root);
}

std::size_t Store::node_count(NodeId root) const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> todo{root};
  std::size_t count = 0;
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    if (is_terminal(v) || !seen.insert(v).second) continue;
    ++count;
    todo.push_back(nodes_[v].lo);
    todo.push_back(nodes_[v].hi);
  }
  return count;
}

bool Store::reaches(NodeId from, NodeId to) const {
  if (from == to) return true;
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> todo{from};
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    if (v == to) return true;
    if (is_terminal(v) || !seen.insert(v).second) continue;
    todo.push_back(nodes_[v].lo);
    todo.push_back(nodes_[v].hi);
  }
  return false;
}

bool Store::is_acyclic(NodeId root) const {
  enum Color : std::uint8_t { white, grey, black };
  std::unordered_map<NodeId, Color> color;
  // Iterative three-color DFS; a grey->grey edge is a back edge.
  std::vector<std::pair<NodeId, bool>> todo{{root, false}};
  while (!todo.empty()) {
    auto [v, exiting] = todo.back();
    todo.pop_back();
    if (is_terminal(v)) continue;
    if (exiting) {
      color[v] = black;
      continue;
    }
    auto& c = color[v];
    if (c == black) continue;
    if (c == grey) return false;
    c = grey;
    todo.emplace_back(v, true);
    for (const NodeId next : {nodes_[v].lo, nodes_[v].hi}) {
      if (!is_terminal(next)) {
        auto it = color.find(next);
        if (it != color.end() && it->second == grey) return false;
        if (it == color.end() || it->second == white) {
          todo.emplace_back(next, false);
        }
      }
    }
  }
  return true;
}

void Store::to_dot(NodeId root, std::ostream& os) const {
  os << "digraph seqbdd {\n";
  os << "  node [shape=circle];\n";
  os << "  t0 [shape=box, label=\"0\"];\n";
  os << "  t1 [shape=box, label=\"1\"];\n";
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> order;
  std::vector<NodeId> todo{root};
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    if (is_terminal(v) || !seen.insert(v).second) continue;
    order.push_back(v);
    todo.push_back(nodes_[v].hi);
    todo.push_back(nodes_[v].lo);
  }
  auto name = [](NodeId v) {
    if (v == kZero) return std::string("t0");
    if (v == kOne) return std::string("t1");
    return "n" + std::to_string(v);
  };
  for (const NodeId v : order) {
    std::string label;
    for (const char c : nodes_[v].top.text) {
      if (c == '"' || c == '\\') label.push_back('\\');
      label.push_back(c);
    }
    os << "  " << name(v) << " [label=\"" << label << "\"];\n";
  }
  for (const NodeId v : order) {
    os << "  " << name(v) << " -> " << name(nodes_[v].hi) << ";\n";
    os << "  " << name(v) << " -> " << name(nodes_[v].lo) << " [style=dashed];\n";
  }
  os << "}\n";
}

}  // namespace seqbdd
