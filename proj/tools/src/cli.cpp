#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqbdd/baselines.hpp"
#include "seqbdd/errors.hpp"
#include "seqbdd/evalkit.hpp"
#include "seqbdd/extract.hpp"
#include "seqbdd/ingest.hpp"
#include "seqbdd/store.hpp"
#include "seqbdd/word_table.hpp"

namespace seqbdd::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return in;
}

struct BuildArgs {
  std::string input;
  RunConfig config;
  bool chars = false;
  std::string dot;
};

std::vector<TaggedPhrase> load_phrases(const BuildArgs& args) {
  std::ifstream in = open_input(args.input);
  std::vector<TaggedPhrase> phrases =
      args.chars ? read_chars(in) : read_tagged(in);
  if (!args.config.anchors.empty()) {
    phrases = search_phrases(phrases, args.config.anchors, args.config.max_gap);
    if (phrases.empty()) {
      throw std::runtime_error("no sentence matches the anchor sequence");
    }
  }
  return phrases;
}

void add_input_options(CLI::App& cmd, BuildArgs& args) {
  cmd.add_option("--input", args.input, "tagged phrase file")->required();
  cmd.add_flag("--chars", args.chars,
               "treat each character as its own word and tag");
  cmd.add_option("--anchors", args.config.anchors,
                 "keep only sentences containing these words in order");
  cmd.add_option("--max-gap", args.config.max_gap,
                 "most non-anchor words allowed between consecutive anchors");
}

void add_mode_options(CLI::App& cmd, BuildArgs& args) {
  cmd.add_option("--mode", args.config.mode, "construction mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Mode>{{"original", Mode::original},
                                      {"relaxed", Mode::relaxed}}))
      ->default_str("relaxed");
  cmd.add_flag_callback(
      "--no-sort", [&args] { args.config.sort_inputs = false; },
      "fold phrases together in file order instead of the canonical sort");
}

void add_extract_options(CLI::App& cmd, BuildArgs& args) {
  cmd.add_option("--theta", args.config.theta,
                 "lexical threshold in (0,1]; defaults to 1.0 original, "
                 "0.5 relaxed")
      ->check([](const std::string& v) -> std::string {
        try {
          const double x = std::stod(v);
          if (x > 0.0 && x <= 1.0) return {};
        } catch (const std::exception&) {
        }
        return "theta must lie in (0, 1]";
      });
  cmd.add_option("--min-edge-freq", args.config.min_edge_freq,
                 "drop flattened edges traversed fewer times than this");
  cmd.add_option("--top-k", args.config.top_k, "ranked templates to keep");
  cmd.add_option("--max-paths", args.config.max_paths,
                 "abort if path enumeration exceeds this");
  cmd.add_flag("--require-slot", args.config.require_slot,
               "drop templates without a slot");
}

int run_build(const BuildArgs& args, std::ostream& out) {
  const std::vector<TaggedPhrase> phrases = load_phrases(args);
  SymbolTable symbols;
  Store store(symbols, args.config.mode);
  const BuiltGraph built =
      build_graph(store, phrases, args.config.sort_inputs);
  if (!args.dot.empty()) {
    std::ofstream dot(args.dot);
    if (!dot) throw std::runtime_error("cannot write " + args.dot);
    store.to_dot(built.root, dot);
  }
  out << "nodes=" << store.node_count(built.root) << "\n";
  out << "sequences=" << store.count_sequences(built.root) << "\n";
  return 0;
}

int run_extract(const BuildArgs& args, std::ostream& out) {
  const std::vector<TaggedPhrase> phrases = load_phrases(args);
  SymbolTable symbols;
  Store store(symbols, args.config.mode);
  const BuiltGraph built =
      build_graph(store, phrases, args.config.sort_inputs);
  const std::vector<Template> templates =
      extract(store, built.root, built.sequences, built.words,
              args.config.extract_config());
  std::size_t rank = 0;
  for (const Template& t : templates) {
    out << ++rank << '\t' << t.weight << '\t' << render(t) << "\n";
  }
  return 0;
}

int run_compare(const BuildArgs& args, std::ostream& out) {
  std::ifstream in = open_input(args.input);
  const std::vector<TaggedPhrase> phrases =
      args.chars ? read_chars(in) : read_tagged(in);
  SymbolTable symbols;
  const std::vector<std::vector<Symbol>> sequences =
      tag_sequences(phrases, symbols);
  const SizeReport report = compare_sizes(sequences, symbols);
  out << to_csv(report, std::filesystem::path(args.input).stem().string())
      << "\n";
  return 0;
}

int run_eval_mrr(const std::string& hyp_dir, const std::string& gold_path,
                 std::ostream& out, std::ostream& err) {
  std::ifstream gold_in = open_input(gold_path);
  const std::vector<GoldCase> gold = read_gold(gold_in);
  if (gold.empty()) {
    throw std::runtime_error("no cases in " + gold_path);
  }
  std::vector<RankedCase> cases;
  cases.reserve(gold.size());
  for (const GoldCase& g : gold) {
    RankedCase c;
    c.gold = g.templates;
    const std::filesystem::path hyp =
        std::filesystem::path(hyp_dir) / (g.id + ".tsv");
    std::ifstream in(hyp);
    if (in) {
      c.hypotheses = read_ranked_tsv(in);
    } else {
      err << "note: no hypothesis file for case " << g.id << ", counting it "
          << "as unmatched\n";
    }
    cases.push_back(std::move(c));
  }
  out << "mrr=" << fixed6(mrr(cases)) << "\n";
  out << "recall=" << fixed6(recall(cases)) << "\n";
  return 0;
}

std::vector<bool> read_bool_lines(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<bool> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "0") {
      out.push_back(false);
    } else if (line == "1") {
      out.push_back(true);
    } else {
      throw ParseError(path + " line " + std::to_string(line_no) +
                       ": expected 0 or 1");
    }
  }
  return out;
}

int run_eval_prf(const std::string& pred_path, const std::string& gold_path,
                 std::ostream& out) {
  const Prf result = prf(read_bool_lines(pred_path), read_bool_lines(gold_path));
  out << "p=" << fixed6(result.precision) << "\n";
  out << "r=" << fixed6(result.recall) << "\n";
  out << "f1=" << fixed6(result.f1) << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sequence graph construction and template extraction"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "build a graph and report its size");
  add_input_options(*build, build_args);
  add_mode_options(*build, build_args);
  build->add_option("--dot", build_args.dot, "write the graph as DOT");

  BuildArgs extract_args;
  CLI::App* extract = app.add_subcommand("extract", "emit ranked templates as TSV");
  add_input_options(*extract, extract_args);
  add_mode_options(*extract, extract_args);
  add_extract_options(*extract, extract_args);

  BuildArgs compare_args;
  CLI::App* compare =
      app.add_subcommand("compare", "emit the structure size CSV report");
  compare->add_option("--input", compare_args.input, "tagged phrase file")
      ->required();
  compare->add_flag("--chars", compare_args.chars,
                    "treat each character as its own word and tag");

  std::string hyp_dir;
  std::string gold_path;
  CLI::App* eval_mrr =
      app.add_subcommand("eval-mrr", "rank metrics for per-case hypothesis files");
  eval_mrr->add_option("--hyp", hyp_dir, "directory of <case-id>.tsv files")
      ->required();
  eval_mrr->add_option("--gold", gold_path, "gold template file")->required();

  std::string pred_path;
  std::string prf_gold_path;
  CLI::App* eval_prf =
      app.add_subcommand("eval-prf", "classification metrics from 0/1 files");
  eval_prf->add_option("--pred", pred_path, "predicted labels, one 0/1 per line")
      ->required();
  eval_prf->add_option("--gold", prf_gold_path, "gold labels, one 0/1 per line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (build->parsed()) return run_build(build_args, out);
    if (extract->parsed()) return run_extract(extract_args, out);
    if (compare->parsed()) return run_compare(compare_args, out);
    if (eval_mrr->parsed()) return run_eval_mrr(hyp_dir, gold_path, out, err);
    if (eval_prf->parsed()) return run_eval_prf(pred_path, prf_gold_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace seqbdd::cli
