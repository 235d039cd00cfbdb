#include "sarcgen/pipeline.hpp"

#include <exception>
#include <utility>

#include "sarcgen/errors.hpp"
#include "sarcgen/reversal.hpp"
#include "sarcgen/rng.hpp"

namespace sarcgen {

namespace {

using nlohmann::json;

constexpr std::size_t kRecommendedMaxTokens = 15;

// Memoizes a stage result; a stage that threw keeps throwing the same
// error on every later request, so systems sharing it agree.
template <typename T>
class Memo {
public:
  template <typename F>
  const T& get(F&& compute) {
    if (error_) std::rethrow_exception(error_);
    if (!value_) {
      try {
        value_ = compute();
      } catch (...) {
        error_ = std::current_exception();
        throw;
      }
    }
    return *value_;
  }

private:
  std::optional<T> value_;
  std::exception_ptr error_;
};

struct PreparedContext {
  RetrievedContext retrieved;
  std::string harmonized;
  RetrievedContext corrected;  // retrieved metadata with the corrected text
};

json utterance_json(const Utterance& u) {
  json tags = json::array();
  for (PosTag t : u.tags) tags.push_back(to_string(t));
  return json{{"surface", u.surface}, {"tokens", u.tokens}, {"tags", tags}};
}

json context_json(const RetrievedContext& ctx) {
  return json{{"sentence", ctx.sentence},
              {"source_id", ctx.source_id},
              {"position", to_string(ctx.position)},
              {"substituted", ctx.substituted},
              {"substituted_noun",
               ctx.substituted_noun ? json(*ctx.substituted_noun) : json(nullptr)}};
}

// All shared stage computations for one input, reused across systems.
class PipelineRun {
public:
  PipelineRun(std::string input, const SystemConfig& config, const Resources& resources,
              const Backends& backends)
      : input_(std::move(input)),
        config_(config),
        resources_(resources),
        backends_(backends) {}

  const Utterance& input_utterance() {
    return input_utt_.get([&] { return tokenize(input_, resources_.tagger()); });
  }

  const PronounProfile& profile() {
    return profile_.get([&] { return pronoun_profile(input_utterance()); });
  }

  const ReversalResult& reversal() {
    return reversal_.get([&] {
      const auto tagger = resources_.tagger();
      return reverse_valence(input_utterance(), resources_.sentiment,
                             resources_.antonyms, tagger, config_.tau);
    });
  }

  const std::vector<std::string>& terms() {
    return terms_.get([&] {
      auto t = content_terms(input_utterance(), resources_.stopwords);
      if (t.empty()) {
        throw NoConcept("input has no content terms to query the causes backend with");
      }
      return t;
    });
  }

  const std::vector<ConceptCandidate>& candidates() {
    return candidates_.get(
        [&] { return query_causes(*backends_.causes, terms(), config_.k); });
  }

  const ConceptPhrase& concept_phrase() {
    return concept_.get([&] {
      const auto tagger = resources_.tagger();
      return select_concept(candidates(), input_utterance(), resources_.stopwords,
                            tagger, resources_.fillers);
    });
  }

  const std::vector<RetrievedContext>& retrieved() {
    return retrieved_.get([&] {
      auto out = retrieve_contexts(*resources_.corpus, concept_phrase(),
                                   input_utterance().tokens.size(), config_.max_out);
      if (out.empty()) {
        throw NoContext("no corpus sentence satisfies the retrieval constraints");
      }
      return out;
    });
  }

  const std::vector<PreparedContext>& prepared() {
    return prepared_.get([&] {
      std::vector<PreparedContext> out;
      const auto tagger = resources_.tagger();
      for (const auto& ctx : retrieved()) {
        PreparedContext prep;
        prep.retrieved = ctx;
        const Utterance ctx_utt = tokenize(ctx.sentence, tagger);
        prep.harmonized = harmonize_pronouns(ctx_utt, profile()).surface;
        prep.corrected = ctx;
        prep.corrected.sentence = correct_grammar(backends_.gec, prep.harmonized);
        out.push_back(std::move(prep));
      }
      return out;
    });
  }

  // Ranked candidates for a given hypothesis; memoized per hypothesis so FM
  // and NoRV each score every context exactly once.
  const std::vector<RankedCandidate>& ranked(const std::string& hypothesis) {
    auto it = ranked_.find(hypothesis);
    if (it == ranked_.end()) {
      it = ranked_.emplace(hypothesis, Memo<std::vector<RankedCandidate>>{}).first;
    }
    return it->second.get([&] {
      std::vector<RetrievedContext> corrected;
      corrected.reserve(prepared().size());
      for (const auto& prep : prepared()) corrected.push_back(prep.corrected);
      return rank_by_incongruity(*backends_.nli, corrected, hypothesis);
    });
  }

  const std::string& raw_input() const { return input_; }
  const SystemConfig& config() const { return config_; }

private:
  std::string input_;
  SystemConfig config_;
  const Resources& resources_;
  const Backends& backends_;

  Memo<Utterance> input_utt_;
  Memo<PronounProfile> profile_;
  Memo<ReversalResult> reversal_;
  Memo<std::vector<std::string>> terms_;
  Memo<std::vector<ConceptCandidate>> candidates_;
  Memo<ConceptPhrase> concept_;
  Memo<std::vector<RetrievedContext>> retrieved_;
  Memo<std::vector<PreparedContext>> prepared_;
  std::map<std::string, Memo<std::vector<RankedCandidate>>> ranked_;
};

void check_config(System system, const SystemConfig& config, const Resources& resources,
                  const Backends& backends) {
  if (system == System::NSI && !config.seed) {
    throw ConfigError("NSI requires a seed");
  }
  if (system != System::RV) {
    if (!resources.corpus) {
      throw ConfigError(std::string(to_string(system)) + " requires a corpus index");
    }
    if (backends.causes == nullptr) {
      throw ConfigError(std::string(to_string(system)) + " requires a causes backend");
    }
  }
  if ((system == System::FM || system == System::NoRV) && backends.nli == nullptr) {
    throw ConfigError(std::string(to_string(system)) + " requires an nli backend");
  }
  if (config.tau < 0.0 || config.tau > 1.0) {
    throw ConfigError("tau must be in [0,1]");
  }
  if (config.k <= 0) {
    throw ConfigError("k must be positive");
  }
  if (config.max_out == 0) {
    throw ConfigError("max_out must be positive");
  }
}

json config_json(System system, const SystemConfig& config) {
  return json{{"system", to_string(system)},
              {"tau", config.tau},
              {"k", config.k},
              {"max_out", config.max_out},
              {"seed", config.seed ? json(*config.seed) : json(nullptr)}};
}

SarcasmOutput drive(PipelineRun& run, System system) {
  const SystemConfig& config = run.config();
  json trace;
  trace["schema_version"] = 1;
  trace["system"] = to_string(system);
  trace["config"] = config_json(system, config);

  auto stage = [&trace](const char* name, auto&& compute) -> decltype(auto) {
    try {
      return compute();
    } catch (const Error& e) {
      trace["error"] = json{{"stage", name}, {"kind", e.kind()}, {"message", e.what()}};
      throw PipelineError(e.kind(), e.what(), trace);
    }
  };

  const Utterance& input =
      stage("tokenize", [&]() -> const Utterance& { return run.input_utterance(); });
  trace["input"] = utterance_json(input);
  trace["warnings"] = json::array();
  if (input.tokens.size() > kRecommendedMaxTokens) {
    trace["warnings"].push_back("input has " + std::to_string(input.tokens.size()) +
                                " tokens; recommended maximum is " +
                                std::to_string(kRecommendedMaxTokens));
  }

  std::string reversed_text;
  if (system != System::NoRV) {
    const ReversalResult& rev = stage(
        "reversal", [&]() -> const ReversalResult& { return run.reversal(); });
    trace["reversal"] = json{
        {"strategy", to_string(rev.strategy)},
        {"edit_index", rev.edit_index},
        {"original_token", rev.original_token},
        {"replacement_token",
         rev.replacement_token ? json(*rev.replacement_token) : json(nullptr)},
        {"reversed_tokens", rev.reversed.tokens},
        {"reversed_text", rev.reversed.surface}};
    reversed_text = rev.reversed.surface;
  }

  if (system == System::RV) {
    trace["output"] = reversed_text;
    return SarcasmOutput{reversed_text, system, std::move(trace)};
  }

  const auto& terms =
      stage("content_terms",
            [&]() -> const std::vector<std::string>& { return run.terms(); });
  trace["content_terms"] = terms;

  const auto& candidates = stage("causes", [&]() -> const std::vector<ConceptCandidate>& {
    return run.candidates();
  });
  trace["candidates"] = json::array();
  for (const auto& c : candidates) {
    trace["candidates"].push_back(json{{"phrase", c.phrase}, {"score", c.score}});
  }

  const ConceptPhrase& phrase = stage(
      "select_concept", [&]() -> const ConceptPhrase& { return run.concept_phrase(); });
  trace["concept"] = json{{"text", phrase.text},
                          {"source_phrase", phrase.source.phrase},
                          {"source_score", phrase.source.score},
                          {"nouns", phrase.nouns}};

  const auto& retrieved = stage("retrieve", [&]() -> const std::vector<RetrievedContext>& {
    return run.retrieved();
  });
  trace["retrieved"] = json::array();
  for (const auto& ctx : retrieved) trace["retrieved"].push_back(context_json(ctx));

  const auto& prepared = stage("grammar", [&]() -> const std::vector<PreparedContext>& {
    return run.prepared();
  });
  trace["contexts"] = json::array();
  for (const auto& prep : prepared) {
    trace["contexts"].push_back(json{{"source_id", prep.retrieved.source_id},
                                     {"harmonized", prep.harmonized},
                                     {"corrected", prep.corrected.sentence}});
  }

  RetrievedContext chosen;
  if (system == System::NSI) {
    SplitMix64 rng(*config.seed);
    const std::size_t index = static_cast<std::size_t>(rng.pick(prepared.size()));
    chosen = prepared[index].corrected;
    trace["nsi_choice"] = json{{"seed", *config.seed}, {"index", index}};
  } else {
    const std::string hypothesis =
        system == System::FM ? reversed_text : detokenize(input.tokens);
    const auto& ranked =
        stage("rank", [&]() -> const std::vector<RankedCandidate>& {
          return run.ranked(hypothesis);
        });
    trace["hypothesis"] = hypothesis;
    trace["ranked"] = json::array();
    for (const auto& rc : ranked) {
      trace["ranked"].push_back(json{{"source_id", rc.context.source_id},
                                     {"sentence", rc.context.sentence},
                                     {"entailment", rc.scores.entailment},
                                     {"neutral", rc.scores.neutral},
                                     {"contradiction", rc.scores.contradiction}});
    }
    chosen = ranked.front().context;
  }
  trace["chosen"] = context_json(chosen);

  std::string output;
  if (system == System::NoRV) {
    output = chosen.sentence;
  } else {
    output = reversed_text + " " + chosen.sentence;
  }
  trace["output"] = output;
  return SarcasmOutput{std::move(output), system, std::move(trace)};
}

}  // namespace

const char* to_string(System s) {
  switch (s) {
    case System::FM: return "FM";
    case System::RV: return "RV";
    case System::NoRV: return "NoRV";
    case System::NSI: return "NSI";
  }
  return "FM";
}

std::optional<System> system_from_string(std::string_view name) {
  const std::string lowered = to_lower(name);
  if (lowered == "fm") return System::FM;
  if (lowered == "rv") return System::RV;
  if (lowered == "norv") return System::NoRV;
  if (lowered == "nsi") return System::NSI;
  return std::nullopt;
}

Resources Resources::load(const ResourcePaths& paths) {
  Resources r;
  r.sentiment = SentimentLexicon::load(paths.sentiment_lexicon);
  r.antonyms = AntonymLexicon::load(paths.antonym_lexicon);
  r.stopwords = StopwordSet::load(paths.stopwords);
  if (paths.fillers) {
    r.fillers = load_fillers(*paths.fillers);
  }
  if (paths.corpus) {
    r.corpus = CorpusIndex::build(*paths.corpus);
  }
  return r;
}

SarcasmOutput generate(const std::string& input, const SystemConfig& config,
                       const Resources& resources, const Backends& backends) {
  check_config(config.system, config, resources, backends);
  PipelineRun run(input, config, resources, backends);
  return drive(run, config.system);
}

std::map<System, AblationEntry> run_ablation(const std::string& input,
                                             const SystemConfig& base_config,
                                             const Resources& resources,
                                             const Backends& backends) {
  PipelineRun run(input, base_config, resources, backends);
  std::map<System, AblationEntry> out;
  for (System system : {System::FM, System::RV, System::NoRV, System::NSI}) {
    AblationEntry entry;
    try {
      check_config(system, base_config, resources, backends);
      auto result = drive(run, system);
      entry.trace = result.trace;
      entry.output = std::move(result);
    } catch (const PipelineError& e) {
      entry.error_kind = e.kind();
      entry.error_message = e.what();
      entry.trace = e.trace();
    } catch (const Error& e) {
      entry.error_kind = e.kind();
      entry.error_message = e.what();
    }
    out.emplace(system, std::move(entry));
  }
  return out;
}

}  // namespace sarcgen
