#include "seqbdd/evalkit.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "seqbdd/errors.hpp"

namespace seqbdd {

namespace {

bool is_slot_token(std::string_view token) {
  constexpr std::string_view kSlot = "<slot>";
  if (token.size() != kSlot.size()) return false;
  for (std::size_t i = 0; i < kSlot.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(token[i])) != kSlot[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string normalize_template(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  bool last_was_slot = false;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) break;
    const std::string_view token = s.substr(i, j - i);
    i = j;
    const bool slot = is_slot_token(token);
    if (slot && last_was_slot) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(slot ? std::string_view("<slot>") : token);
    last_was_slot = slot;
  }
  return out;
}

bool match_template(std::string_view hypothesis, std::string_view gold) {
  return normalize_template(hypothesis) == normalize_template(gold);
}

namespace {

// 0 means no hypothesis matched.
std::size_t best_rank(const RankedCase& c) {
  for (std::size_t i = 0; i < c.hypotheses.size(); ++i) {
    for (const std::string& g : c.gold) {
      if (match_template(c.hypotheses[i], g)) return i + 1;
    }
  }
  return 0;
}

}  // namespace

double mrr(const std::vector<RankedCase>& cases) {
  if (cases.empty()) throw std::invalid_argument("mrr: no cases");
  double sum = 0.0;
  for (const RankedCase& c : cases) {
    const std::size_t r = best_rank(c);
    if (r != 0) sum += 1.0 / static_cast<double>(r);
  }
  return sum / static_cast<double>(cases.size());
}

double recall(const std::vector<RankedCase>& cases) {
  if (cases.empty()) throw std::invalid_argument("recall: no cases");
  std::size_t matched = 0;
  for (const RankedCase& c : cases) {
    if (best_rank(c) != 0) ++matched;
  }
  return static_cast<double>(matched) / static_cast<double>(cases.size());
}

Prf prf(const std::vector<bool>& predictions, const std::vector<bool>& gold) {
  if (predictions.size() != gold.size()) {
    throw std::invalid_argument("prf: prediction and gold lengths differ");
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] && gold[i]) ++tp;
    if (predictions[i] && !gold[i]) ++fp;
    if (!predictions[i] && gold[i]) ++fn;
  }
  Prf out;
  out.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  out.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  out.f1 = out.precision + out.recall == 0.0
               ? 0.0
               : 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

std::vector<GoldCase> read_gold(std::istream& in) {
  std::vector<GoldCase> cases;
  GoldCase current;
  bool open = false;
  std::string line;
  auto flush = [&] {
    if (open) cases.push_back(std::move(current));
    current = {};
    open = false;
  };
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (!open) {
      current.id = line;
      open = true;
    } else {
      current.templates.push_back(line);
    }
  }
  flush();
  return cases;
}

std::vector<std::string> read_ranked_tsv(std::istream& in) {
  std::vector<std::string> hypotheses;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw ParseError("ranked TSV line " + std::to_string(line_no) +
                       ": expected rank, weight, and template columns");
    }
    hypotheses.push_back(line.substr(t2 + 1));
  }
  return hypotheses;
}

}  // namespace seqbdd
