#include "sarcgen/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sarcgen/errors.hpp"
#include "sarcgen/http.hpp"
#include "sarcgen/reversal.hpp"

namespace sarcgen {

namespace {

using nlohmann::json;

NliScores scores_from_json(const json& doc, const char* where) {
  if (!doc.is_object() || !doc.contains("entailment") || !doc.contains("neutral") ||
      !doc.contains("contradiction") || !doc["entailment"].is_number() ||
      !doc["neutral"].is_number() || !doc["contradiction"].is_number()) {
    throw BackendMalformed(std::string(where) + ": missing or non-numeric scores");
  }
  return NliScores{doc["entailment"].get<double>(), doc["neutral"].get<double>(),
                   doc["contradiction"].get<double>()};
}

std::string pair_key(const std::string& premise, const std::string& hypothesis) {
  return premise + '\x1f' + hypothesis;
}

struct ContentWord {
  std::string lemma;
  PosTag tag;
};

std::vector<ContentWord> content_words(const std::string& text,
                                       const SentimentLexicon& lex,
                                       const StopwordSet& stop) {
  LexiconTagger tagger(lex);
  const auto tokens = split_tokens(text);
  const auto tags = tagger.tag(tokens);
  std::vector<ContentWord> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const PosTag t = tags[i];
    if (t != PosTag::Noun && t != PosTag::Verb && t != PosTag::Adj && t != PosTag::Adv) {
      continue;
    }
    const std::string lowered = to_lower(tokens[i]);
    if (stop.contains(lowered)) continue;
    out.push_back({t == PosTag::Noun ? noun_lemma(lowered) : lowered, t});
  }
  return out;
}

bool has_negation(const std::string& text) {
  for (const auto& tok : split_tokens(text)) {
    if (is_negation_token(tok)) return true;
  }
  return false;
}

}  // namespace

void validate(const NliScores& scores) {
  const double values[] = {scores.entailment, scores.neutral, scores.contradiction};
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw BackendMalformed("nli scores out of [0,1]");
    }
  }
  const double sum = scores.entailment + scores.neutral + scores.contradiction;
  if (std::abs(sum - 1.0) > 1e-6) {
    throw BackendMalformed("nli scores sum to " + std::to_string(sum) + ", expected 1");
  }
}

FixtureNliClient::FixtureNliClient(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open nli fixture: " + path.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("nli fixture " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw ConfigError("nli fixture " + path.string() + ": missing pairs array");
  }
  for (const auto& entry : doc["pairs"]) {
    if (!entry.is_object() || !entry.contains("premise") ||
        !entry["premise"].is_string()) {
      throw ConfigError("nli fixture " + path.string() + ": bad pair entry");
    }
    const auto scores = scores_from_json(entry, "nli fixture");
    const std::string premise = entry["premise"].get<std::string>();
    const std::string hypothesis =
        entry.contains("hypothesis") && entry["hypothesis"].is_string()
            ? entry["hypothesis"].get<std::string>()
            : std::string();
    if (hypothesis.empty()) {
      by_premise_[premise] = scores;
    } else {
      pairs_[pair_key(premise, hypothesis)] = scores;
    }
  }
  if (doc.contains("default")) {
    default_ = scores_from_json(doc["default"], "nli fixture default");
  }
}

NliScores FixtureNliClient::score(const std::string& premise,
                                  const std::string& hypothesis) {
  if (auto it = pairs_.find(pair_key(premise, hypothesis)); it != pairs_.end()) {
    return it->second;
  }
  if (auto it = by_premise_.find(premise); it != by_premise_.end()) {
    return it->second;
  }
  if (default_) return *default_;
  throw BackendMalformed("nli fixture has no entry for premise: " + premise);
}

NliScores HeuristicNliClient::score(const std::string& premise,
                                    const std::string& hypothesis) {
  const auto p_words = content_words(premise, *sentiment_, *stopwords_);
  const auto h_words = content_words(hypothesis, *sentiment_, *stopwords_);

  int antonym_pairs = 0;
  int shared = 0;
  std::unordered_set<std::string> h_lemmas;
  for (const auto& w : h_words) h_lemmas.insert(w.lemma);

  std::unordered_set<std::string> counted;
  for (const auto& p : p_words) {
    if (counted.count(p.lemma) > 0) continue;
    counted.insert(p.lemma);
    if (h_lemmas.count(p.lemma) > 0) ++shared;
    for (const auto& h : h_words) {
      const auto p_ants = antonyms_->antonyms(p.lemma, p.tag);
      const auto h_ants = antonyms_->antonyms(h.lemma, h.tag);
      const bool pair =
          std::find(p_ants.begin(), p_ants.end(), h.lemma) != p_ants.end() ||
          std::find(h_ants.begin(), h_ants.end(), p.lemma) != h_ants.end();
      if (pair) {
        ++antonym_pairs;
        break;
      }
    }
  }

  const int negation_mismatch = has_negation(premise) != has_negation(hypothesis) ? 1 : 0;
  const double raw = antonym_pairs + negation_mismatch - shared;
  const double sig = 1.0 / (1.0 + std::exp(-raw));

  NliScores scores;
  scores.neutral = 0.2;
  scores.contradiction = 0.8 * sig;
  scores.entailment = 0.8 - scores.contradiction;
  return scores;
}

NliScores HttpNliClient::score(const std::string& premise, const std::string& hypothesis) {
  json request = {{"premise", premise}, {"hypothesis", hypothesis}};
  auto res = http_post_json(base_url_, "/v1/nli", request.dump());
  if (res.status != 200) {
    throw BackendUnavailable("nli backend returned status " + std::to_string(res.status));
  }
  json doc = json::parse(res.body, nullptr, false);
  if (doc.is_discarded()) {
    throw BackendMalformed("nli backend: response is not JSON");
  }
  return scores_from_json(doc, "nli backend");
}

NliScores nli_scores(NliClient& client, const std::string& premise,
                     const std::string& hypothesis) {
  if (premise.empty() || hypothesis.empty()) {
    throw EmptyInput("nli_scores: empty premise or hypothesis");
  }
  auto scores = client.score(premise, hypothesis);
  validate(scores);
  return scores;
}

std::vector<RankedCandidate> rank_by_incongruity(NliClient& client,
                                                 std::span<const RetrievedContext> contexts,
                                                 const std::string& reversed) {
  if (contexts.empty()) {
    throw NoContext("rank_by_incongruity: no contexts to rank");
  }
  std::vector<RankedCandidate> ranked;
  ranked.reserve(contexts.size());
  for (const auto& ctx : contexts) {
    ranked.push_back({ctx, nli_scores(client, ctx.sentence, reversed)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedCandidate& a,
                                             const RankedCandidate& b) {
    if (a.scores.contradiction != b.scores.contradiction) {
      return a.scores.contradiction > b.scores.contradiction;
    }
    if (a.context.sentence.size() != b.context.sentence.size()) {
      return a.context.sentence.size() < b.context.sentence.size();
    }
    if (a.context.sentence != b.context.sentence) {
      return a.context.sentence < b.context.sentence;
    }
    return a.context.source_id < b.context.source_id;
  });
  return ranked;
}

}  // namespace sarcgen
