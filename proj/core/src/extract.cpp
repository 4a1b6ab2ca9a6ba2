#include "seqbdd/extract.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "seqbdd/errors.hpp"

namespace seqbdd {

namespace {

// Non-terminals along the lo-chain starting at v, in chain order.
std::vector<NodeId> chain_members(const Store& store, NodeId v) {
  std::vector<NodeId> members;
  while (!is_terminal(v)) {
    members.push_back(v);
    v = store.node(v).lo;
  }
  return members;
}

bool chain_ends_at_one(const Store& store, NodeId v) {
  while (!is_terminal(v)) {
    v = store.node(v).lo;
  }
  return v == kOne;
}

}  // namespace

std::uint64_t FlatDag::edge_weight(NodeId u, NodeId v) const {
  auto it = edges.find({u, v});
  return it == edges.end() ? 0 : it->second;
}

FlatDag flatten(const Store& store, NodeId root) {
  FlatDag dag;
  dag.roots = chain_members(store, root);
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> todo(dag.roots.rbegin(), dag.roots.rend());
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    if (!seen.insert(v).second) continue;
    dag.order.push_back(v);
    FlatDag::NodeInfo info;
    info.symbol = store.node(v).top;
    info.succ = chain_members(store, store.node(v).hi);
    info.accepting = chain_ends_at_one(store, store.node(v).hi);
    for (auto it = info.succ.rbegin(); it != info.succ.rend(); ++it) {
      todo.push_back(*it);
    }
    for (const NodeId s : info.succ) {
      dag.edges.emplace(std::pair{v, s}, 0);
    }
    dag.info.emplace(v, std::move(info));
  }
  return dag;
}

std::vector<NodeId> trace_phrase(const FlatDag& dag, std::span<const Symbol> phrase) {
  auto fail = [&](std::span<const Symbol> p) -> TracingError {
    std::string text;
    for (const Symbol s : p) {
      if (!text.empty()) text.push_back(' ');
      text.append(s.text);
    }
    return TracingError("phrase not accepted by the graph: " + text);
  };
  if (phrase.empty()) throw fail(phrase);
  std::vector<NodeId> visited;
  visited.reserve(phrase.size());
  const std::vector<NodeId>* candidates = &dag.roots;
  for (const Symbol s : phrase) {
    bool matched = false;
    for (const NodeId c : *candidates) {
      if (dag.at(c).symbol == s) {
        visited.push_back(c);
        matched = true;
        break;
      }
    }
    if (!matched) throw fail(phrase);
    candidates = &dag.at(visited.back()).succ;
  }
  if (!dag.at(visited.back()).accepting) throw fail(phrase);
  return visited;
}

void weight_edges(FlatDag& dag, std::span<const std::vector<Symbol>> phrases) {
  for (const auto& phrase : phrases) {
    const std::vector<NodeId> visited = trace_phrase(dag, phrase);
    dag.info.at(visited.front()).entries += 1;
    for (std::size_t i = 0; i + 1 < visited.size(); ++i) {
      dag.edges.at({visited[i], visited[i + 1]}) += 1;
    }
    dag.info.at(visited.back()).accepts += 1;
  }
}

FlatDag prune(const FlatDag& dag, std::uint64_t min_edge_freq) {
  // Keep edges at or above the threshold, then restrict to nodes reachable
  // from an entry node over the surviving edges.
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> kept;
  for (const auto& [edge, w] : dag.edges) {
    if (w >= min_edge_freq) kept.insert({edge, w});
  }
  std::unordered_set<NodeId> reachable;
  {
    std::vector<NodeId> todo(dag.roots.begin(), dag.roots.end());
    while (!todo.empty()) {
      const NodeId v = todo.back();
      todo.pop_back();
      if (!reachable.insert(v).second) continue;
      for (const NodeId s : dag.at(v).succ) {
        if (kept.count({v, s}) != 0) todo.push_back(s);
      }
    }
  }
  FlatDag out;
  out.roots = dag.roots;
  for (const NodeId v : dag.order) {
    if (reachable.count(v) == 0) continue;
    out.order.push_back(v);
    FlatDag::NodeInfo info = dag.at(v);
    std::erase_if(info.succ, [&](NodeId s) {
      return kept.count({v, s}) == 0 || reachable.count(s) == 0;
    });
    out.info.emplace(v, std::move(info));
  }
  for (const auto& [edge, w] : kept) {
    if (reachable.count(edge.first) != 0 && reachable.count(edge.second) != 0) {
      out.edges.insert({edge, w});
    }
  }
  return out;
}

std::vector<PathCandidate> enumerate_paths(const FlatDag& dag, std::size_t max_paths) {
  std::vector<PathCandidate> out;
  std::vector<NodeId> path;

  auto weight_of = [&]() -> std::uint64_t {
    if (path.size() == 1) return dag.at(path.front()).accepts;
    std::uint64_t w = ~0ULL;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      w = std::min(w, dag.edge_weight(path[i], path[i + 1]));
    }
    return w;
  };

  std::function<void(NodeId)> dfs = [&](NodeId v) {
    path.push_back(v);
    if (dag.at(v).accepts > 0) {
      if (out.size() == max_paths) {
        throw CapacityError("enumerate_paths: path count exceeds cap of " +
                            std::to_string(max_paths));
      }
      out.push_back(PathCandidate{path, weight_of()});
    }
    for (const NodeId s : dag.at(v).succ) {
      dfs(s);
    }
    path.pop_back();
  };
  for (const NodeId r : dag.roots) {
    if (dag.info.count(r) != 0) dfs(r);
  }
  return out;
}

std::string render(const Template& t) {
  std::string s;
  for (const auto& e : t.elements) {
    if (!s.empty()) s.push_back(' ');
    s.append(e.kind == TemplateElement::Kind::slot ? "<slot>" : e.word);
  }
  return s;
}

Template label_slots(const FlatDag& dag, const PathCandidate& path,
                     const WordTable& words, double theta) {
  Template t;
  t.weight = path.weight;
  t.elements.reserve(path.nodes.size());
  for (const NodeId v : path.nodes) {
    if (!words.has_words(v)) {
      throw std::invalid_argument("label_slots: node \"" +
                                  std::string(dag.at(v).symbol.text) +
                                  "\" has no recorded words");
    }
    const WordTable::Dominant d = words.dominant(v);
    const bool unanimous = words.words_at(v).size() == 1;
    if (unanimous || d.fraction > theta) {
      t.elements.push_back({TemplateElement::Kind::lexical, d.word});
    } else {
      t.elements.push_back({TemplateElement::Kind::slot, {}});
    }
  }
  return t;
}

std::vector<Template> merge_templates(std::vector<Template> templates) {
  // Collapse runs of consecutive slots first; merging keys on the collapsed
  // rendering.
  for (auto& t : templates) {
    std::vector<TemplateElement> collapsed;
    for (auto& e : t.elements) {
      if (e.kind == TemplateElement::Kind::slot && !collapsed.empty() &&
          collapsed.back().kind == TemplateElement::Kind::slot) {
        continue;
      }
      collapsed.push_back(std::move(e));
    }
    t.elements = std::move(collapsed);
  }
  std::map<std::string, Template> merged;
  for (auto& t : templates) {
    const std::string key = render(t);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::move(t));
    } else {
      it->second.weight += t.weight;
    }
  }
  std::vector<Template> out;
  out.reserve(merged.size());
  for (auto& [key, t] : merged) {
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(), [](const Template& a, const Template& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return render(a) < render(b);
  });
  return out;
}

std::vector<Template> extract(const Store& store, NodeId root,
                              std::span<const std::vector<Symbol>> phrases,
                              const WordTable& words, const ExtractConfig& config) {
  if (!(config.theta > 0.0) || config.theta > 1.0) {
    throw std::invalid_argument("extract: theta must lie in (0, 1]");
  }
  if (config.top_k == 0) {
    throw std::invalid_argument("extract: top_k must be positive");
  }
  FlatDag dag = flatten(store, root);
  weight_edges(dag, phrases);
  const FlatDag pruned = prune(dag, config.min_edge_freq);
  const std::vector<PathCandidate> paths = enumerate_paths(pruned, config.max_paths);
  std::vector<Template> templates;
  templates.reserve(paths.size());
  for (const auto& p : paths) {
    templates.push_back(label_slots(pruned, p, words, config.theta));
  }
  std::vector<Template> merged = merge_templates(std::move(templates));
  if (merged.size() > config.top_k) {
    merged.resize(config.top_k);
  }
  if (config.require_slot) {
    std::erase_if(merged, [](const Template& t) {
      return std::none_of(t.elements.begin(), t.elements.end(), [](const TemplateElement& e) {
        return e.kind == TemplateElement::Kind::slot;
      });
    });
  }
  return merged;
}

}  // namespace seqbdd
