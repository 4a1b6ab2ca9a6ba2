#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "seqbdd/extract.hpp"
#include "seqbdd/ingest.hpp"
#include "seqbdd/store.hpp"
#include "seqbdd/word_table.hpp"

namespace {

using seqbdd::Mode;
using seqbdd::NodeId;
using seqbdd::Store;
using seqbdd::Symbol;
using seqbdd::SymbolTable;

std::vector<std::vector<std::string>> random_phrases(std::size_t count,
                                                     std::size_t alphabet,
                                                     std::size_t max_len) {
  std::mt19937 rng(1234 + count);
  std::uniform_int_distribution<std::size_t> len(3, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
  std::vector<std::vector<std::string>> out(count);
  for (auto& phrase : out) {
    phrase.resize(len(rng));
    for (auto& word : phrase) word = "t" + std::to_string(pick(rng));
  }
  return out;
}

std::vector<std::vector<Symbol>> intern_all(
    SymbolTable& symbols, const std::vector<std::vector<std::string>>& phrases) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(phrases.size());
  for (const auto& phrase : phrases) {
    std::vector<Symbol> seq;
    seq.reserve(phrase.size());
    for (const auto& word : phrase) seq.push_back(symbols.intern(word));
    out.push_back(std::move(seq));
  }
  return out;
}

void construct_mode(benchmark::State& state, Mode mode) {
  const auto phrases =
      random_phrases(static_cast<std::size_t>(state.range(0)), 20, 10);
  for (auto _ : state) {
    SymbolTable symbols;
    Store store(symbols, mode);
    benchmark::DoNotOptimize(store.construct(intern_all(symbols, phrases)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_construct_original(benchmark::State& state) {
  construct_mode(state, Mode::original);
}
BENCHMARK(BM_construct_original)->Range(64, 4096);

void BM_construct_relaxed(benchmark::State& state) {
  construct_mode(state, Mode::relaxed);
}
BENCHMARK(BM_construct_relaxed)->Range(64, 4096);

void BM_union_fold(benchmark::State& state) {
  const auto phrases =
      random_phrases(static_cast<std::size_t>(state.range(0)), 20, 10);
  for (auto _ : state) {
    SymbolTable symbols;
    Store store(symbols, Mode::original);
    benchmark::DoNotOptimize(
        store.construct_incremental(intern_all(symbols, phrases)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_union_fold)->Range(64, 4096);

void BM_contains(benchmark::State& state) {
  const auto phrases = random_phrases(2048, 20, 10);
  SymbolTable symbols;
  Store store(symbols, Mode::original);
  const auto seqs = intern_all(symbols, phrases);
  const NodeId root = store.construct(seqs);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(store.contains(root, seqs[i]));
    i = (i + 1) % seqs.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_contains);

void BM_extract_pipeline(benchmark::State& state) {
  // Template-shaped corpus: five tag positions, middle two drawn from
  // six-word pools, rest fixed.
  const std::size_t lines = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<seqbdd::TaggedPhrase> phrases(lines);
  for (auto& phrase : phrases) {
    phrase.tokens = {{"alpha", "T1"},
                     {"w" + std::to_string(pick(rng)), "T2"},
                     {"mid", "T3"},
                     {"v" + std::to_string(pick(rng)), "T4"},
                     {"omega", "T5"}};
  }
  for (auto _ : state) {
    SymbolTable symbols;
    Store store(symbols, Mode::relaxed);
    const seqbdd::BuiltGraph built = seqbdd::build_graph(store, phrases);
    seqbdd::ExtractConfig config;
    benchmark::DoNotOptimize(seqbdd::extract(store, built.root, built.sequences,
                                             built.words, config));
  }
  state.SetItemsProcessed(state.iterations() * lines);
}
BENCHMARK(BM_extract_pipeline)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
