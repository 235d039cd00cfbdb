#include "sarcgen/commonsense.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sarcgen/errors.hpp"
#include "sarcgen/http.hpp"

namespace sarcgen {

namespace {

using nlohmann::json;

std::vector<ConceptCandidate> parse_candidates(const json& arr, const char* where) {
  if (!arr.is_array()) {
    throw BackendMalformed(std::string(where) + ": candidates is not an array");
  }
  std::vector<ConceptCandidate> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("phrase") || !item.contains("score") ||
        !item["phrase"].is_string() || !item["score"].is_number()) {
      throw BackendMalformed(std::string(where) + ": bad candidate entry");
    }
    ConceptCandidate c{item["phrase"].get<std::string>(), item["score"].get<double>()};
    if (c.phrase.empty()) {
      throw BackendMalformed(std::string(where) + ": empty candidate phrase");
    }
    out.push_back(std::move(c));
  }
  return out;
}

void sort_and_truncate(std::vector<ConceptCandidate>& candidates, int k) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.score > b.score; });
  if (k >= 0 && candidates.size() > static_cast<std::size_t>(k)) {
    candidates.resize(static_cast<std::size_t>(k));
  }
}

// Case-insensitive "phrase starts with filler followed by a space" check.
bool strip_filler_prefix(std::string& phrase, std::span<const std::string> fillers) {
  const std::string lowered = to_lower(phrase);
  for (const auto& filler : fillers) {
    const std::string f = to_lower(filler);
    if (f.empty()) continue;
    if (lowered.size() > f.size() + 1 && lowered.compare(0, f.size(), f) == 0 &&
        lowered[f.size()] == ' ') {
      phrase = phrase.substr(f.size() + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

FixtureCausesClient::FixtureCausesClient(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open causes fixture: " + path.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("causes fixture " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object()) {
    throw ConfigError("causes fixture " + path.string() + ": missing entries object");
  }
  for (const auto& [key, value] : doc["entries"].items()) {
    entries_[key] = parse_candidates(value, "causes fixture");
  }
}

std::string FixtureCausesClient::terms_key(std::span<const std::string> terms) {
  std::string key;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) key.push_back('|');
    key += terms[i];
  }
  return key;
}

std::vector<ConceptCandidate> FixtureCausesClient::causes(
    const std::vector<std::string>& terms, int k) {
  auto it = entries_.find(terms_key(terms));
  if (it == entries_.end()) return {};
  auto out = it->second;
  sort_and_truncate(out, k);
  return out;
}

std::vector<ConceptCandidate> HttpCausesClient::causes(
    const std::vector<std::string>& terms, int k) {
  json request = {{"terms", terms}, {"k", k}};
  auto res = http_post_json(base_url_, "/v1/causes", request.dump());
  if (res.status != 200) {
    throw BackendUnavailable("causes backend returned status " +
                             std::to_string(res.status));
  }
  json doc = json::parse(res.body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("candidates")) {
    throw BackendMalformed("causes backend: response is not a candidates object");
  }
  auto out = parse_candidates(doc["candidates"], "causes backend");
  sort_and_truncate(out, k);
  return out;
}

std::vector<ConceptCandidate> query_causes(CausesClient& client,
                                           const std::vector<std::string>& terms,
                                           int k) {
  if (terms.empty()) {
    throw EmptyInput("query_causes: empty term list");
  }
  auto out = client.causes(terms, k);
  sort_and_truncate(out, k);
  return out;
}

const std::vector<std::string>& default_fillers() {
  static const std::vector<std::string> fillers = {"you to be", "you to get",
                                                   "person will be", "you have"};
  return fillers;
}

std::vector<std::string> load_fillers(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open filler list: " + path.string());
  }
  std::vector<std::string> fillers;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    fillers.push_back(line.substr(first, last - first + 1));
  }
  return fillers;
}

ConceptPhrase select_concept(std::span<const ConceptCandidate> candidates,
                             const Utterance& input, const StopwordSet& stop,
                             const Tagger& tagger,
                             std::span<const std::string> fillers) {
  // Input content lemmas: lowercase, trailing 's' stripped for nouns.
  std::unordered_set<std::string> input_lemmas;
  for (std::size_t i = 0; i < input.tokens.size(); ++i) {
    const PosTag t = input.tags[i];
    if (t != PosTag::Noun && t != PosTag::Verb && t != PosTag::Adj && t != PosTag::Adv) {
      continue;
    }
    const std::string lowered = to_lower(input.tokens[i]);
    if (stop.contains(lowered)) continue;
    input_lemmas.insert(t == PosTag::Noun ? noun_lemma(lowered) : lowered);
  }

  for (const auto& candidate : candidates) {
    std::string phrase = candidate.phrase;
    while (strip_filler_prefix(phrase, fillers)) {
    }

    auto tokens = split_tokens(phrase);
    std::size_t start = 0;
    while (start < tokens.size() && stop.contains(tokens[start])) ++start;
    tokens.erase(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(start));
    if (tokens.empty()) continue;

    const auto tags = tagger.tag(tokens);
    bool overlaps = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const PosTag t = tags[i];
      if (t != PosTag::Noun && t != PosTag::Verb && t != PosTag::Adj && t != PosTag::Adv) {
        continue;
      }
      const std::string lowered = to_lower(tokens[i]);
      if (stop.contains(lowered)) continue;
      const std::string lemma = t == PosTag::Noun ? noun_lemma(lowered) : lowered;
      if (input_lemmas.count(lemma) > 0) {
        overlaps = true;
        break;
      }
    }
    if (overlaps) continue;

    ConceptPhrase selected;
    selected.source = candidate;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) selected.text.push_back(' ');
      selected.text += tokens[i];
      if (tags[i] == PosTag::Noun) selected.nouns.push_back(tokens[i]);
    }
    return selected;
  }
  throw NoConcept("every causes candidate was rejected (overlap or empty)");
}

}  // namespace sarcgen
