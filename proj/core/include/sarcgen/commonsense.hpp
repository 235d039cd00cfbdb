#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sarcgen/text.hpp"

namespace sarcgen {

struct ConceptCandidate {
  std::string phrase;
  double score = 0.0;  // backend-reported, higher = more probable
};

// Causes-relation backend. Implementations must return candidates sorted
// by descending score, at most k of them.
class CausesClient {
public:
  virtual ~CausesClient() = default;
  virtual std::vector<ConceptCandidate> causes(const std::vector<std::string>& terms,
                                               int k) = 0;
};

// Offline stub reading a JSON fixture:
//   {"entries": {"term1|term2|...": [{"phrase": "...", "score": 0.9}, ...]}}
// Unknown keys yield an empty candidate list.
class FixtureCausesClient : public CausesClient {
public:
  explicit FixtureCausesClient(const std::filesystem::path& path);
  std::vector<ConceptCandidate> causes(const std::vector<std::string>& terms,
                                       int k) override;

  static std::string terms_key(std::span<const std::string> terms);

private:
  std::unordered_map<std::string, std::vector<ConceptCandidate>> entries_;
};

// POST {base_url}/v1/causes {"terms": [...], "k": n}
//   -> {"candidates": [{"phrase": str, "score": num}, ...]}
// Any non-200 status is BackendUnavailable; schema violations are
// BackendMalformed.
class HttpCausesClient : public CausesClient {
public:
  explicit HttpCausesClient(std::string base_url) : base_url_(std::move(base_url)) {}
  std::vector<ConceptCandidate> causes(const std::vector<std::string>& terms,
                                       int k) override;

private:
  std::string base_url_;
};

// Validates and normalizes a backend's candidates: sorted by descending
// score (stable), truncated to k. Throws EmptyInput when terms is empty.
std::vector<ConceptCandidate> query_causes(CausesClient& client,
                                           const std::vector<std::string>& terms,
                                           int k = 5);

struct ConceptPhrase {
  std::string text;          // cleaned phrase
  ConceptCandidate source;   // the candidate it came from, unmodified
  std::vector<std::string> nouns;  // noun tokens inside the cleaned phrase
};

// The common COMET filler prefixes quoted in the retrieval rules.
const std::vector<std::string>& default_fillers();

// One filler phrase per line, '#' comments ignored.
std::vector<std::string> load_fillers(const std::filesystem::path& path);

// Walks candidates in order: strips filler prefixes and leading stopwords,
// then accepts the first phrase whose content-word lemmas do not intersect
// the input's content-term lemmas. Throws NoConcept when all are rejected.
ConceptPhrase select_concept(std::span<const ConceptCandidate> candidates,
                             const Utterance& input, const StopwordSet& stop,
                             const Tagger& tagger,
                             std::span<const std::string> fillers);

}  // namespace sarcgen
