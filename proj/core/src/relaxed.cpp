#include <unordered_set>

#include "seqbdd/errors.hpp"
#include "seqbdd/store.hpp"

namespace seqbdd {

namespace {
// Clears the flag on unwind so a throwing union cannot wedge the store in
// pure mode.
struct MergeGuard {
  bool& active;
  explicit MergeGuard(bool& a) : active(a) { active = true; }
  ~MergeGuard() { active = false; }
};
}  // namespace

// Sharing key is <top, lo>. On a key hit the requested hi is folded into the
// existing node by union, subject to two guards.
//
// Cycle guard: rewriting u.hi must never make u reachable from its own hi
// subgraph. Checked against the requested hi before the union (cheap
// rejection) and against the union result at commit time (defensive).
//
// Empty-sequence safety: the merge is taken only when no subproblem of
// unite(hi, u.hi) would union ONE with a language lacking the empty
// sequence. Such a union has to splice ONE into every level of the other
// side's lo-chains, rebuilding whole spines as fresh variant nodes; those
// rebuilds are what let a relaxed graph outgrow its original-mode
// counterpart. The check is a dry run of the union recursion (see
// union_epsilon_safe below); a top-level parity test is not enough because
// equal-top descents can expose the mismatch only between hi languages of
// different lengths, e.g. uniting {b} with {bb} hits unite({eps}, {b}).
//
// Merges do not nest. The union runs through get_node so its nodes land in
// the shared tables (mode-consistent), but a key hit inside it shares on the
// full triple instead of starting another merge. Nested merges would commit
// mutations mid-union, clearing the union memo that breaks repeated
// subproblems, and a union can then re-enter the exact subproblem it is
// already computing (unite(ONE, {a}) wants <a, ONE>, whose merge wants
// unite(ONE, {a}) again) and recurse forever. With merging suspended the
// store is immutable for the duration of the union, so the memo stays valid
// and the union is a plain product recursion; each top-level call commits at
// most one mutation.
//
// A rejected share falls back to hash-consing on the full triple: the
// <top, lo> key is taken, but identical rejected triples must still collapse
// to one node or repeated-symbol inputs inflate the graph past its
// original-mode size. Rejected nodes never own a <top, lo> key, so their hi
// is never rewritten and the triple table stays accurate.
NodeId Store::get_node_relaxed(Symbol top, NodeId lo, NodeId hi) {
  // Caller (get_node) has already zero-suppressed, so hi != kZero.
  const std::uint64_t key = pack(top.id, lo);
  auto it = unique2_.find(key);
  if (it == unique2_.end()) {
    const NodeId v = make_node(top, lo, hi);
    unique2_.emplace(key, v);
    return v;
  }
  const NodeId u = it->second;
  if (nodes_[u].hi == hi) return u;  // exact hit, nothing to union
  if (!merge_active_ && !reaches(hi, u) &&
      union_epsilon_safe(hi, nodes_[u].hi)) {
    MergeGuard guard(merge_active_);
    const NodeId merged = unite(hi, nodes_[u].hi);
    // The union only combines subgraphs that cannot reach u, so this
    // re-check should never fire; it pins the acyclicity invariant anyway.
    if (!reaches(merged, u)) {
      nodes_[u].hi = merged;
      union_memo_.clear();  // memoized unions may now denote stale languages
      return u;
    }
  }
  const TripleKey triple{top.id, lo, hi};
  auto it3 = unique3_.find(triple);
  if (it3 != unique3_.end()) return it3->second;
  const NodeId v = make_node(top, lo, hi);
  unique3_.emplace(triple, v);
  return v;
}

bool Store::accepts_empty(NodeId v) const {
  while (!is_terminal(v)) v = nodes_[v].lo;
  return v == kOne;
}

// Dry run of unite's case analysis: true iff no reachable subproblem unions
// ONE with a language that lacks the empty sequence. Splicing ONE into a
// language that already has it walks existing lo-chains and resolves to the
// node it started from, so those branches need no further descent. States
// are memoized, so the walk visits each product pair once and terminates on
// any acyclic input.
bool Store::union_epsilon_safe(NodeId p, NodeId q) const {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<NodeId, NodeId>> stack{{p, q}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    if (a == kZero || b == kZero || a == b) continue;
    if (a == kOne || b == kOne) {
      if (!accepts_empty(a == kOne ? b : a)) return false;
      continue;
    }
    if (!seen.insert(pack(a, b)).second) continue;
    const Node& na = nodes_[a];
    const Node& nb = nodes_[b];
    if (na.top == nb.top) {
      stack.push_back({na.lo, nb.lo});
      stack.push_back({na.hi, nb.hi});
    } else if (na.top < nb.top) {
      stack.push_back({na.lo, b});
    } else {
      stack.push_back({a, nb.lo});
    }
  }
  return true;
}

// Once construction settles, hi mutations can have turned a key-owning node
// into a structural twin of an earlier triple-consed fallback node. Twins
// cannot be collapsed in place (parents of both already exist) and would
// push the relaxed graph past its original-mode size, so the settled graph
// is rebuilt bottom-up with exact triple sharing. No merging happens here:
// the language is preserved node for node, and the rebuilt nodes are
// unregistered, so later construction in the same store can never mutate a
// returned root.
NodeId Store::canonicalize(NodeId root) {
  if (is_terminal(root)) return root;
  std::unordered_map<NodeId, NodeId> memo;
  std::unordered_map<TripleKey, NodeId, TripleHash> triples;
  std::vector<std::pair<NodeId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    const auto [v, expanded] = stack.back();
    stack.pop_back();
    if (is_terminal(v) || memo.count(v) != 0) continue;
    if (!expanded) {
      stack.push_back({v, true});
      stack.push_back({nodes_[v].lo, false});
      stack.push_back({nodes_[v].hi, false});
      continue;
    }
    const Node n = nodes_[v];
    const auto resolve = [&](NodeId c) {
      return is_terminal(c) ? c : memo.at(c);
    };
    const TripleKey key{n.top.id, resolve(n.lo), resolve(n.hi)};
    auto it = triples.find(key);
    const NodeId w =
        it != triples.end() ? it->second : make_node(n.top, key.lo, key.hi);
    triples.emplace(key, w);
    memo.emplace(v, w);
  }
  return memo.at(root);
}

}  // namespace seqbdd
