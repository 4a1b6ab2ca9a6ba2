#include "seqbdd/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "seqbdd/errors.hpp"

namespace seqbdd {

namespace {

std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

TaggedToken split_token(const std::string& token, std::size_t line_no) {
  const std::size_t slash = token.rfind('/');
  if (slash == std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": token \"" + token +
                     "\" has no '/' separator");
  }
  TaggedToken out{token.substr(0, slash), token.substr(slash + 1)};
  if (out.tag.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": token \"" + token +
                     "\" has an empty tag");
  }
  return out;
}

std::vector<TaggedPhrase> read_slash(const std::vector<std::string>& lines) {
  std::vector<TaggedPhrase> phrases;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    TaggedPhrase phrase;
    std::string token;
    while (row >> token) {
      phrase.tokens.push_back(split_token(token, i + 1));
    }
    if (!phrase.tokens.empty()) phrases.push_back(std::move(phrase));
  }
  return phrases;
}

std::vector<TaggedPhrase> read_tsv(const std::vector<std::string>& lines) {
  std::vector<TaggedPhrase> phrases;
  TaggedPhrase phrase;
  auto flush = [&] {
    if (!phrase.tokens.empty()) phrases.push_back(std::move(phrase));
    phrase = {};
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("line " + std::to_string(i + 1) +
                       ": expected word<TAB>tag");
    }
    TaggedToken token{line.substr(0, tab), line.substr(tab + 1)};
    if (token.tag.empty()) {
      throw ParseError("line " + std::to_string(i + 1) + ": empty tag");
    }
    phrase.tokens.push_back(std::move(token));
  }
  flush();
  return phrases;
}

}  // namespace

std::vector<TaggedPhrase> read_tagged(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(chomp(std::move(line)));
  bool tsv = false;
  for (const std::string& l : lines) {
    if (l.find_first_not_of(" \t") == std::string::npos) continue;
    tsv = l.find('\t') != std::string::npos;
    break;
  }
  std::vector<TaggedPhrase> phrases = tsv ? read_tsv(lines) : read_slash(lines);
  if (phrases.empty()) {
    throw std::invalid_argument("read_tagged: no phrases in input");
  }
  return phrases;
}

std::vector<TaggedPhrase> read_chars(std::istream& in) {
  std::vector<TaggedPhrase> phrases;
  std::string line;
  while (std::getline(in, line)) {
    line = chomp(std::move(line));
    TaggedPhrase phrase;
    for (const char c : line) {
      if (c == ' ' || c == '\t') continue;
      const std::string s(1, c);
      phrase.tokens.push_back({s, s});
    }
    if (!phrase.tokens.empty()) phrases.push_back(std::move(phrase));
  }
  if (phrases.empty()) {
    throw std::invalid_argument("read_chars: no phrases in input");
  }
  return phrases;
}

void write_tagged(const std::vector<TaggedPhrase>& phrases, std::ostream& out) {
  for (const TaggedPhrase& phrase : phrases) {
    for (std::size_t i = 0; i < phrase.tokens.size(); ++i) {
      if (i != 0) out << ' ';
      out << phrase.tokens[i].word << '/' << phrase.tokens[i].tag;
    }
    out << '\n';
  }
}

std::vector<TaggedPhrase> search_phrases(const std::vector<TaggedPhrase>& corpus,
                                         const std::vector<std::string>& anchors,
                                         std::size_t max_gap) {
  if (anchors.empty()) {
    throw std::invalid_argument("search_phrases: no anchors");
  }
  std::vector<TaggedPhrase> out;
  for (const TaggedPhrase& sentence : corpus) {
    const auto& toks = sentence.tokens;
    // Can anchors[a..] be placed starting at or after `from`, each within
    // max_gap words of its predecessor? Backtracking, because the nearest
    // occurrence of one anchor can strand the next.
    std::function<bool(std::size_t, std::size_t)> feasible =
        [&](std::size_t a, std::size_t from) {
          if (a == anchors.size()) return true;
          const std::size_t limit =
              from + max_gap < from ? toks.size() : from + max_gap;
          for (std::size_t i = from; i < toks.size() && i <= limit; ++i) {
            if (toks[i].word == anchors[a] && feasible(a + 1, i + 1)) {
              return true;
            }
          }
          return false;
        };
    std::size_t start = std::string::npos;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].word == anchors.front() && feasible(1, i + 1)) {
        start = i;
        break;
      }
    }
    if (start != std::string::npos) {
      TaggedPhrase phrase;
      phrase.tokens.assign(toks.begin() + static_cast<std::ptrdiff_t>(start),
                           toks.end());
      out.push_back(std::move(phrase));
    }
  }
  return out;
}

std::vector<std::string> clean_tweets(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const std::string& raw : lines) {
    if (raw.rfind("RT ", 0) == 0 || raw.rfind('@', 0) == 0) continue;
    std::string line;
    std::size_t i = 0;
    while (i < raw.size()) {
      const bool http = raw.compare(i, 7, "http://") == 0;
      const bool https = raw.compare(i, 8, "https://") == 0;
      if (http || https) {
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
          ++j;
        }
        line.append("URL");
        i = j;
      } else {
        line.push_back(raw[i]);
        ++i;
      }
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::move(line));
  }
  return out;
}

double RunConfig::resolved_theta() const {
  if (theta.has_value()) return *theta;
  return mode == Mode::original ? 1.0 : 0.5;
}

ExtractConfig RunConfig::extract_config() const {
  ExtractConfig config;
  config.theta = resolved_theta();
  config.min_edge_freq = min_edge_freq;
  config.top_k = top_k;
  config.max_paths = max_paths;
  config.require_slot = require_slot;
  return config;
}

std::vector<std::vector<Symbol>> tag_sequences(const std::vector<TaggedPhrase>& phrases,
                                               SymbolTable& symbols) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(phrases.size());
  for (const TaggedPhrase& phrase : phrases) {
    std::vector<Symbol> seq;
    seq.reserve(phrase.tokens.size());
    for (const TaggedToken& token : phrase.tokens) {
      seq.push_back(symbols.intern(token.tag));
    }
    out.push_back(std::move(seq));
  }
  return out;
}

BuiltGraph build_graph(Store& store, const std::vector<TaggedPhrase>& phrases,
                       bool sort_inputs) {
  BuiltGraph built;
  built.sequences = tag_sequences(phrases, store.symbols());
  built.root = sort_inputs ? store.construct(built.sequences)
                           : store.construct_incremental(built.sequences);
  for (std::size_t p = 0; p < phrases.size(); ++p) {
    const Store::Walk walk = store.walk(built.root, built.sequences[p]);
    if (!walk.accepted) {
      throw TracingError("built graph rejects input phrase " +
                         std::to_string(p + 1));
    }
    for (std::size_t i = 0; i < walk.visited.size(); ++i) {
      built.words.record(walk.visited[i], phrases[p].tokens[i].word);
    }
  }
  return built;
}

}  // namespace seqbdd
