#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sarcgen/lexicons.hpp"
#include "sarcgen/retrieval.hpp"
#include "sarcgen/text.hpp"

namespace sarcgen {

struct NliScores {
  double entailment = 0.0;
  double neutral = 0.0;
  double contradiction = 0.0;
};

// Throws BackendMalformed unless every score is in [0,1] and the three sum
// to 1 within 1e-6.
void validate(const NliScores& scores);

// 3-way NLI backend; premise is the retrieved context, hypothesis the
// (reversed) sentence. The order is a frozen contract.
class NliClient {
public:
  virtual ~NliClient() = default;
  virtual NliScores score(const std::string& premise, const std::string& hypothesis) = 0;
};

// Offline stub:
//   {"pairs": [{"premise": p, "hypothesis": h, "entailment": e, "neutral": n,
//               "contradiction": c}, ...],
//    "default": {"entailment": e, "neutral": n, "contradiction": c}}
// Entries with an empty hypothesis match any hypothesis for that premise.
// Without a matching entry or a default, scoring throws BackendMalformed.
class FixtureNliClient : public NliClient {
public:
  explicit FixtureNliClient(const std::filesystem::path& path);
  NliScores score(const std::string& premise, const std::string& hypothesis) override;

private:
  std::unordered_map<std::string, NliScores> pairs_;     // premise \x1f hypothesis
  std::unordered_map<std::string, NliScores> by_premise_;
  std::optional<NliScores> default_;
};

// Degraded-mode lexical scorer, not a claim of NLI fidelity:
//   raw = antonym pairs across content words
//       + negation mismatch (0/1)
//       - shared content lemmas
//   contradiction = 0.8 * sigmoid(raw), entailment = 0.8 - contradiction,
//   neutral fixed at 0.2.
class HeuristicNliClient : public NliClient {
public:
  HeuristicNliClient(const SentimentLexicon& sentiment, const AntonymLexicon& antonyms,
                     const StopwordSet& stopwords)
      : sentiment_(&sentiment), antonyms_(&antonyms), stopwords_(&stopwords) {}
  NliScores score(const std::string& premise, const std::string& hypothesis) override;

private:
  const SentimentLexicon* sentiment_;
  const AntonymLexicon* antonyms_;
  const StopwordSet* stopwords_;
};

// POST {base_url}/v1/nli {"premise": str, "hypothesis": str}
//   -> {"entailment": num, "neutral": num, "contradiction": num}
class HttpNliClient : public NliClient {
public:
  explicit HttpNliClient(std::string base_url) : base_url_(std::move(base_url)) {}
  NliScores score(const std::string& premise, const std::string& hypothesis) override;

private:
  std::string base_url_;
};

// Calls the backend and validates the result.
NliScores nli_scores(NliClient& client, const std::string& premise,
                     const std::string& hypothesis);

struct RankedCandidate {
  RetrievedContext context;
  NliScores scores;
};

// Scores every context once and sorts by contradiction descending; ties
// break on shorter sentence, then lexicographic, then lower source id.
// Throws NoContext on an empty list.
std::vector<RankedCandidate> rank_by_incongruity(NliClient& client,
                                                 std::span<const RetrievedContext> contexts,
                                                 const std::string& reversed);

}  // namespace sarcgen
