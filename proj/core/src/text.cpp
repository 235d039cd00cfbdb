#include "sarcgen/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "sarcgen/errors.hpp"

namespace sarcgen {

namespace {

bool is_core_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

constexpr std::string_view kClosingPunct = ".,!?;:)]}'\"";
constexpr std::string_view kOpeningPunct = "([{";

}  // namespace

const char* to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Verb: return "VERB";
    case PosTag::Adj: return "ADJ";
    case PosTag::Adv: return "ADV";
    case PosTag::Pron: return "PRON";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

bool pos_from_letter(char letter, PosTag& out) {
  switch (letter) {
    case 'a': out = PosTag::Adj; return true;
    case 'n': out = PosTag::Noun; return true;
    case 'v': out = PosTag::Verb; return true;
    case 'r': out = PosTag::Adv; return true;
    default: return false;
  }
}

char pos_letter(PosTag tag) {
  switch (tag) {
    case PosTag::Adj: return 'a';
    case PosTag::Noun: return 'n';
    case PosTag::Verb: return 'v';
    case PosTag::Adv: return 'r';
    default: return '?';
  }
}

StopwordSet::StopwordSet(std::initializer_list<std::string> words) {
  for (const auto& w : words) insert(w);
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open stopword file: " + path.string());
  }
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    set.insert(line.substr(first, last - first + 1));
  }
  return set;
}

void StopwordSet::insert(std::string_view word) { words_.insert(to_lower(word)); }

bool StopwordSet::contains(std::string_view word) const {
  return words_.count(to_lower(word)) > 0;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view chunk = text.substr(i, j - i);
    i = j;

    // Peel punctuation off both ends into single-character tokens; interior
    // apostrophes/hyphens are untouched, so "isn't" stays whole while
    // "dogs'" splits into dogs + '.
    std::size_t lo = 0, hi = chunk.size();
    while (lo < hi && !is_core_char(static_cast<unsigned char>(chunk[lo]))) {
      tokens.emplace_back(1, chunk[lo]);
      ++lo;
    }
    std::vector<char> trailing;
    while (hi > lo && !is_core_char(static_cast<unsigned char>(chunk[hi - 1]))) {
      trailing.push_back(chunk[hi - 1]);
      --hi;
    }
    if (hi > lo) tokens.emplace_back(chunk.substr(lo, hi - lo));
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      tokens.emplace_back(1, *it);
    }
  }
  return tokens;
}

Utterance tokenize(std::string_view text, const Tagger& tagger) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw EmptyInput("tokenize: input is blank");
  }
  auto last = text.find_last_not_of(" \t\r\n");
  std::string_view trimmed = text.substr(first, last - first + 1);

  Utterance u;
  u.surface = std::string(trimmed);
  u.tokens = split_tokens(trimmed);
  if (u.tokens.empty()) {
    throw EmptyInput("tokenize: no tokens in input");
  }
  u.tags = tagger.tag(u.tokens);
  return u;
}

std::string detokenize(std::span<const std::string> tokens) {
  if (tokens.empty()) {
    throw EmptyInput("detokenize: empty token list");
  }
  std::string out;
  bool after_opening = false;
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    const bool closing = tok.size() == 1 && kClosingPunct.find(tok[0]) != std::string_view::npos;
    if (!out.empty() && !closing && !after_opening) out.push_back(' ');
    out += tok;
    after_opening = tok.size() == 1 && kOpeningPunct.find(tok[0]) != std::string_view::npos;
  }
  if (out.empty()) {
    throw EmptyInput("detokenize: only empty tokens");
  }
  // Capitalize the first alphabetic character.
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) break;
  }
  const char tail = out.back();
  if (tail != '.' && tail != '!' && tail != '?') out.push_back('.');
  return out;
}

std::vector<std::string> content_terms(const Utterance& u, const StopwordSet& stop) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    const PosTag t = u.tags[i];
    if (t != PosTag::Noun && t != PosTag::Verb && t != PosTag::Adj && t != PosTag::Adv) {
      continue;
    }
    std::string lowered = to_lower(u.tokens[i]);
    if (stop.contains(lowered)) continue;
    if (std::find(terms.begin(), terms.end(), lowered) != terms.end()) continue;
    terms.push_back(std::move(lowered));
  }
  return terms;
}

bool is_punct_token(std::string_view token) {
  if (token.empty()) return true;
  unsigned char c = static_cast<unsigned char>(token.front());
  return std::isalnum(c) == 0 && c < 0x80;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string noun_lemma(std::string_view token) {
  std::string out = to_lower(token);
  if (out.size() >= 3 && out.back() == 's') out.pop_back();
  return out;
}

}  // namespace sarcgen
