#include "sarcgen/lexicons.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "sarcgen/errors.hpp"

namespace sarcgen {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

bool parse_double(std::string_view s, double& out) {
  // std::from_chars<double> is available on gcc >= 11.
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void parse_fail(const char* file_kind, std::size_t line_no,
                             const std::string& reason) {
  std::ostringstream msg;
  msg << file_kind << ": line " << line_no << ": " << reason;
  throw LexiconParseError(msg.str());
}

const std::unordered_set<std::string>& pronoun_set() {
  static const std::unordered_set<std::string> set = {
      "i",    "me",    "my",    "mine",   "myself",     "we",     "us",
      "our",  "ours",  "ourselves",       "you",        "your",   "yours",
      "yourself",      "yourselves",      "he",         "him",    "his",
      "himself",       "she",   "her",    "hers",       "herself","it",
      "its",  "itself","they",  "them",   "their",      "theirs", "themselves"};
  return set;
}

}  // namespace

bool is_pronoun(std::string_view token) {
  return pronoun_set().count(to_lower(token)) > 0;
}

std::string SentimentLexicon::key(std::string_view lemma, PosTag pos) {
  std::string k(lemma);
  k.push_back('\x1f');
  k.push_back(pos_letter(pos));
  return k;
}

SentimentLexicon SentimentLexicon::from_rows(std::span<const SenseRow> rows) {
  // (lemma,pos) -> rank -> scores; later rows for the same rank overwrite.
  std::map<std::string, std::map<int, SentimentScores>> senses;
  for (const auto& row : rows) {
    senses[key(row.lemma, row.pos)][row.rank] = {row.positive, row.negative};
  }
  SentimentLexicon lex;
  for (const auto& [k, by_rank] : senses) {
    double wsum = 0.0, pos = 0.0, neg = 0.0;
    for (const auto& [rank, s] : by_rank) {
      const double w = 1.0 / rank;
      wsum += w;
      pos += w * s.positive;
      neg += w * s.negative;
    }
    lex.aggregated_[k] = {pos / wsum, neg / wsum};
  }
  return lex;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open sentiment lexicon: " + path.string());
  }
  std::vector<SenseRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() != 6) {
      parse_fail("sentiment lexicon", line_no, "expected 6 tab-separated fields, got " +
                                                   std::to_string(fields.size()));
    }
    PosTag pos;
    if (fields[0].size() != 1 || !pos_from_letter(fields[0][0], pos)) {
      parse_fail("sentiment lexicon", line_no, "bad POS letter '" + fields[0] + "'");
    }
    double pos_score = 0.0, neg_score = 0.0;
    if (!parse_double(fields[2], pos_score) || !parse_double(fields[3], neg_score)) {
      parse_fail("sentiment lexicon", line_no, "non-numeric score");
    }
    if (pos_score < 0.0 || neg_score < 0.0 || pos_score + neg_score > 1.0 + 1e-12) {
      parse_fail("sentiment lexicon", line_no, "scores out of range");
    }
    if (fields[4].empty()) {
      parse_fail("sentiment lexicon", line_no, "empty synset terms");
    }
    for (const auto& term : split(fields[4], ' ')) {
      if (term.empty()) continue;
      std::size_t hash = term.rfind('#');
      int rank = 0;
      if (hash == std::string::npos || hash == 0 ||
          !parse_int(std::string_view(term).substr(hash + 1), rank) || rank < 1) {
        parse_fail("sentiment lexicon", line_no, "bad synset term '" + term + "'");
      }
      rows.push_back(SenseRow{to_lower(std::string_view(term).substr(0, hash)), pos, rank,
                              pos_score, neg_score});
    }
  }
  return from_rows(rows);
}

SentimentScores SentimentLexicon::scores(std::string_view lemma, PosTag pos) const {
  auto it = aggregated_.find(key(lemma, pos));
  return it == aggregated_.end() ? SentimentScores{} : it->second;
}

SentimentScores SentimentLexicon::lookup(std::string_view token, PosTag pos) const {
  const std::string lowered = to_lower(token);
  auto it = aggregated_.find(key(lowered, pos));
  if (it != aggregated_.end()) return it->second;
  if (lowered.size() >= 3 && lowered.back() == 's') {
    it = aggregated_.find(key(std::string_view(lowered).substr(0, lowered.size() - 1), pos));
    if (it != aggregated_.end()) return it->second;
  }
  return {};
}

double SentimentLexicon::negative_score(std::string_view token, PosTag pos) const {
  return lookup(token, pos).negative;
}

std::optional<PosTag> SentimentLexicon::lemma_pos(std::string_view lemma) const {
  static constexpr std::array<PosTag, 4> precedence = {PosTag::Noun, PosTag::Verb,
                                                       PosTag::Adj, PosTag::Adv};
  for (PosTag pos : precedence) {
    if (aggregated_.count(key(lemma, pos)) > 0) return pos;
  }
  return std::nullopt;
}

std::string AntonymLexicon::key(std::string_view lemma, PosTag pos) {
  std::string k(lemma);
  k.push_back('\x1f');
  k.push_back(pos_letter(pos));
  return k;
}

AntonymLexicon AntonymLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open antonym lexicon: " + path.string());
  }
  std::map<std::string, std::map<int, std::string>> ranked;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      parse_fail("antonym lexicon", line_no, "expected 4 tab-separated fields, got " +
                                                 std::to_string(fields.size()));
    }
    PosTag pos;
    if (fields[1].size() != 1 || !pos_from_letter(fields[1][0], pos)) {
      parse_fail("antonym lexicon", line_no, "bad POS letter '" + fields[1] + "'");
    }
    const std::string lemma = to_lower(fields[0]);
    const std::string antonym = to_lower(fields[2]);
    if (lemma.empty() || antonym.empty()) {
      parse_fail("antonym lexicon", line_no, "empty lemma or antonym");
    }
    if (lemma == antonym) {
      parse_fail("antonym lexicon", line_no, "self-antonym '" + lemma + "'");
    }
    int rank = 0;
    if (!parse_int(fields[3], rank) || rank < 1) {
      parse_fail("antonym lexicon", line_no, "bad rank '" + fields[3] + "'");
    }
    auto& slot = ranked[key(lemma, pos)];
    if (!slot.emplace(rank, antonym).second) {
      parse_fail("antonym lexicon", line_no,
                 "duplicate rank " + std::to_string(rank) + " for '" + lemma + "'");
    }
  }
  AntonymLexicon lex;
  for (auto& [k, by_rank] : ranked) {
    auto& list = lex.entries_[k];
    list.reserve(by_rank.size());
    for (auto& [rank, antonym] : by_rank) list.push_back(std::move(antonym));
  }
  return lex;
}

std::span<const std::string> AntonymLexicon::antonyms(std::string_view token,
                                                      PosTag pos) const {
  const std::string lowered = to_lower(token);
  auto it = entries_.find(key(lowered, pos));
  if (it == entries_.end() && lowered.size() >= 3 && lowered.back() == 's') {
    it = entries_.find(key(std::string_view(lowered).substr(0, lowered.size() - 1), pos));
  }
  if (it == entries_.end()) return {};
  return it->second;
}

std::vector<PosTag> LexiconTagger::tag(const std::vector<std::string>& tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (is_pronoun(tok)) {
      tags.push_back(PosTag::Pron);
      continue;
    }
    const std::string lowered = to_lower(tok);
    if (auto pos = lexicon_->lemma_pos(lowered)) {
      tags.push_back(*pos);
      continue;
    }
    if (lowered.size() >= 3 && lowered.back() == 's') {
      if (auto pos = lexicon_->lemma_pos(
              std::string_view(lowered).substr(0, lowered.size() - 1))) {
        tags.push_back(*pos);
        continue;
      }
    }
    tags.push_back(PosTag::Other);
  }
  return tags;
}

}  // namespace sarcgen
