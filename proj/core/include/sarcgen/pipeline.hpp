#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "sarcgen/commonsense.hpp"
#include "sarcgen/errors.hpp"
#include "sarcgen/grammar.hpp"
#include "sarcgen/lexicons.hpp"
#include "sarcgen/ranking.hpp"
#include "sarcgen/retrieval.hpp"
#include "sarcgen/text.hpp"

namespace sarcgen {

// The four ablation systems. FM = reversal + retrieval + incongruity
// ranking; RV = reversal only; NoRV = retrieval + ranking against the
// original input; NSI = FM with a seeded random context instead of ranking.
enum class System { FM, RV, NoRV, NSI };

const char* to_string(System s);
std::optional<System> system_from_string(std::string_view name);

struct SystemConfig {
  System system = System::FM;
  double tau = 0.3;           // reversal threshold on the negative score
  int k = 5;                  // causes candidates requested
  std::size_t max_out = 20;   // retrieval bound forwarded to the ranker
  std::optional<std::uint64_t> seed;  // required for NSI
};

struct ResourcePaths {
  std::filesystem::path sentiment_lexicon;
  std::filesystem::path antonym_lexicon;
  std::filesystem::path stopwords;
  std::optional<std::filesystem::path> fillers;
  std::optional<std::filesystem::path> corpus;
};

// Immutable after load; safe to share across concurrent generate calls.
struct Resources {
  SentimentLexicon sentiment;
  AntonymLexicon antonyms;
  StopwordSet stopwords;
  std::vector<std::string> fillers = default_fillers();
  std::optional<CorpusIndex> corpus;

  static Resources load(const ResourcePaths& paths);
  LexiconTagger tagger() const { return LexiconTagger(sentiment); }
};

// Non-owning backend handles; nullptr = not configured. gec may always be
// null (identity fallback); causes/nli are required by systems that use them.
struct Backends {
  CausesClient* causes = nullptr;
  NliClient* nli = nullptr;
  GecClient* gec = nullptr;
};

struct SarcasmOutput {
  std::string output;
  System system = System::FM;
  nlohmann::json trace;  // schema documented in docs/trace_schema.json
};

// Stage failure carrying the trace built so far. kind() mirrors the
// underlying error (NoReversalTarget, NoConcept, NoContext, ...).
class PipelineError : public Error {
public:
  PipelineError(std::string kind, const std::string& message, nlohmann::json trace)
      : Error(message), kind_(std::move(kind)), trace_(std::move(trace)) {}
  const char* kind() const noexcept override { return kind_.c_str(); }
  const nlohmann::json& trace() const { return trace_; }

private:
  std::string kind_;
  nlohmann::json trace_;
};

// End-to-end generation for one input sentence. Throws ConfigError for
// invalid configurations (NSI without seed, missing backend/corpus) and
// PipelineError for per-input stage failures.
SarcasmOutput generate(const std::string& input, const SystemConfig& config,
                       const Resources& resources, const Backends& backends);

struct AblationEntry {
  std::optional<SarcasmOutput> output;
  std::optional<std::string> error_kind;
  std::string error_message;
  nlohmann::json trace;
};

// Runs all four systems over one input, sharing the causes/retrieval work
// where the definitions coincide. Per-system failures are captured in the
// entry, never thrown.
std::map<System, AblationEntry> run_ablation(const std::string& input,
                                             const SystemConfig& base_config,
                                             const Resources& resources,
                                             const Backends& backends);

}  // namespace sarcgen
