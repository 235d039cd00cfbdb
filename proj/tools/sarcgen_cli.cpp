#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sarcgen/errors.hpp"
#include "sarcgen/evaluation.hpp"
#include "sarcgen/pipeline.hpp"

namespace {

using namespace sarcgen;
using nlohmann::json;

std::optional<std::string> env_or_empty(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

struct GenerateArgs {
  std::string input;
  std::string input_file;
  std::string system = "FM";
  std::string corpus;
  std::string sentiment_lex;
  std::string antonym_lex;
  std::string stopwords;
  std::string fillers;
  std::string causes_url;
  std::string causes_fixture;
  std::string nli_url;
  std::string nli_fixture;
  bool nli_heuristic = false;
  std::string gec_url;
  std::optional<std::uint64_t> seed;
  double tau = 0.3;
  int k = 5;
  std::size_t max_out = 20;
  std::string trace_path;
};

int run_generate(const GenerateArgs& args) {
  const auto system = system_from_string(args.system);
  if (!system) {
    std::cerr << "error: unknown system '" << args.system << "'\n";
    return 1;
  }

  std::vector<std::string> inputs;
  if (!args.input.empty()) {
    inputs.push_back(args.input);
  } else {
    std::ifstream in(args.input_file);
    if (!in) {
      std::cerr << "error: cannot open input file " << args.input_file << "\n";
      return 1;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) inputs.push_back(line);
    }
    if (inputs.empty()) {
      std::cerr << "error: input file is empty\n";
      return 1;
    }
  }

  SystemConfig config;
  config.system = *system;
  config.tau = args.tau;
  config.k = args.k;
  config.max_out = args.max_out;
  config.seed = args.seed;

  Resources resources;
  std::unique_ptr<CausesClient> causes;
  std::unique_ptr<NliClient> nli;
  std::unique_ptr<GecClient> gec;
  try {
    ResourcePaths paths;
    paths.sentiment_lexicon = args.sentiment_lex;
    paths.antonym_lexicon = args.antonym_lex;
    paths.stopwords = args.stopwords;
    if (!args.fillers.empty()) paths.fillers = args.fillers;
    if (!args.corpus.empty()) paths.corpus = args.corpus;
    resources = Resources::load(paths);

    const auto causes_url =
        args.causes_url.empty() ? env_or_empty("CAUSES_URL") : args.causes_url;
    if (!args.causes_fixture.empty()) {
      causes = std::make_unique<FixtureCausesClient>(args.causes_fixture);
    } else if (causes_url) {
      causes = std::make_unique<HttpCausesClient>(*causes_url);
    }

    const auto nli_url = args.nli_url.empty() ? env_or_empty("NLI_URL") : args.nli_url;
    if (args.nli_heuristic) {
      nli = std::make_unique<HeuristicNliClient>(resources.sentiment,
                                                 resources.antonyms,
                                                 resources.stopwords);
    } else if (!args.nli_fixture.empty()) {
      nli = std::make_unique<FixtureNliClient>(args.nli_fixture);
    } else if (nli_url) {
      nli = std::make_unique<HttpNliClient>(*nli_url);
    }

    const auto gec_url = args.gec_url.empty() ? env_or_empty("GEC_URL") : args.gec_url;
    if (gec_url) {
      gec = std::make_unique<HttpGecClient>(*gec_url);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  Backends backends{causes.get(), nli.get(), gec.get()};

  // Validate the configuration before any work, so flag mistakes exit 1
  // rather than surfacing as per-item failures.
  try {
    if (config.system == System::NSI && !config.seed) {
      throw ConfigError("--system NSI requires --seed");
    }
    if (config.system != System::RV) {
      if (!resources.corpus) {
        throw ConfigError("--corpus is required for " + args.system);
      }
      if (backends.causes == nullptr) {
        throw ConfigError("--causes-url or --causes-fixture is required for " +
                          args.system);
      }
    }
    if ((config.system == System::FM || config.system == System::NoRV) &&
        backends.nli == nullptr) {
      throw ConfigError("--nli-url, --nli-fixture or --nli-heuristic is required for " +
                        args.system);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  json traces = json::array();
  bool any_failed = false;
  for (const auto& input : inputs) {
    try {
      auto out = generate(input, config, resources, backends);
      for (const auto& warning : out.trace["warnings"]) {
        std::cerr << "warning: " << warning.get<std::string>() << "\n";
      }
      std::cout << out.output << "\n";
      traces.push_back(std::move(out.trace));
    } catch (const PipelineError& e) {
      any_failed = true;
      std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
      traces.push_back(e.trace());
    } catch (const Error& e) {
      // Configuration problems discovered mid-run are still exit 1.
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (!args.trace_path.empty()) {
    std::ofstream out(args.trace_path);
    if (!out) {
      std::cerr << "error: cannot write trace file " << args.trace_path << "\n";
      return 1;
    }
    if (traces.size() == 1) {
      out << traces.front().dump(2) << "\n";
    } else {
      out << traces.dump(2) << "\n";
    }
  }
  return any_failed ? 2 : 0;
}

struct IndexArgs {
  std::string corpus;
  std::string out;
};

int run_index(const IndexArgs& args) {
  try {
    auto index = CorpusIndex::build(args.corpus);
    if (auto cached = CorpusIndex::load_cache(args.out);
        cached && cached->content_hash() == index.content_hash()) {
      std::cout << "index cache is current (" << index.size() << " sentences)\n";
      return 0;
    }
    index.save_cache(args.out);
    std::cout << "indexed " << index.size() << " sentences\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

struct EvalArgs {
  std::string ratings;
  std::string game;
  std::string criterion = "sarcasticness";
  bool correlate = false;
  std::string system = "FM";
  std::string trace_dir;
  bool emit_json = false;
};

int run_eval(const EvalArgs& args) {
  try {
    const auto records = load_ratings(args.ratings);
    const auto criterion = criterion_from_string(args.criterion);
    if (!criterion) {
      std::cerr << "error: unknown criterion '" << args.criterion << "'\n";
      return 1;
    }

    if (!args.game.empty()) {
      const auto colon = args.game.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 >= args.game.size()) {
        std::cerr << "error: --game expects SYSTEM_A:SYSTEM_B\n";
        return 1;
      }
      const std::string system_a = args.game.substr(0, colon);
      const std::string system_b = args.game.substr(colon + 1);
      const auto a = scores_by_item(records, system_a, *criterion);
      const auto b = scores_by_item(records, system_b, *criterion);
      const auto result = pairwise_game(a, b);
      if (args.emit_json) {
        json doc = {{"system_a", system_a},   {"system_b", system_b},
                    {"criterion", to_string(*criterion)},
                    {"wins", result.wins},    {"losses", result.losses},
                    {"ties", result.ties},    {"win_pct", result.win_pct},
                    {"lose_pct", result.lose_pct}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << system_a << " vs " << system_b << " on " << to_string(*criterion)
                  << std::fixed << std::setprecision(1) << ": win " << result.win_pct
                  << "% lose " << result.lose_pct << "% tie " << result.tie_pct()
                  << "% (n=" << result.total() << ")\n";
      }
      return 0;
    }

    if (args.correlate) {
      // Per item: mean rating for (system, criterion) against the chosen
      // context's contradiction score from <trace_dir>/<item_id>.json.
      const auto by_item = scores_by_item(records, args.system, *criterion);
      std::vector<double> xs, ys;
      for (const auto& [item, scores] : by_item) {
        const auto trace_path =
            std::filesystem::path(args.trace_dir) / (item + ".json");
        std::ifstream in(trace_path);
        if (!in) {
          std::cerr << "error: missing trace " << trace_path.string() << "\n";
          return 1;
        }
        json trace = json::parse(in, nullptr, false);
        if (trace.is_discarded() || !trace.contains("ranked") ||
            !trace["ranked"].is_array() || trace["ranked"].empty()) {
          std::cerr << "error: trace " << trace_path.string()
                    << " has no ranked candidates\n";
          return 1;
        }
        double sum = 0.0;
        for (int s : scores) sum += s;
        xs.push_back(sum / static_cast<double>(scores.size()));
        ys.push_back(trace["ranked"][0]["contradiction"].get<double>());
      }
      const double r = pearson(xs, ys);
      std::cout << "pearson(" << args.system << " " << to_string(*criterion)
                << " ratings, contradiction) = " << r << " (n=" << xs.size() << ")\n";
      return 0;
    }

    std::cerr << "error: eval needs --game or --correlate\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sarcgen: unsupervised sarcasm generation by retrieve-and-edit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cmd_generate = app.add_subcommand("generate", "Generate sarcastic output");
  auto* input_opt = cmd_generate->add_option("--input", gen.input, "Input sentence");
  cmd_generate->add_option("--input-file", gen.input_file,
                           "File with one input sentence per line")
      ->excludes(input_opt);
  cmd_generate->add_option("--system", gen.system, "FM|RV|NoRV|NSI")
      ->default_val("FM");
  cmd_generate->add_option("--corpus", gen.corpus, "Retrieval corpus (one sentence per line)");
  cmd_generate->add_option("--sentiment-lex", gen.sentiment_lex, "Sentiment lexicon TSV")
      ->required();
  cmd_generate->add_option("--antonym-lex", gen.antonym_lex, "Antonym lexicon TSV")
      ->required();
  cmd_generate->add_option("--stopwords", gen.stopwords, "Stopword list")->required();
  cmd_generate->add_option("--fillers", gen.fillers, "Filler prefix list");
  cmd_generate->add_option("--causes-url", gen.causes_url,
                           "Causes backend base URL (or CAUSES_URL)");
  cmd_generate->add_option("--causes-fixture", gen.causes_fixture,
                           "Offline causes fixture JSON");
  cmd_generate->add_option("--nli-url", gen.nli_url, "NLI backend base URL (or NLI_URL)");
  cmd_generate->add_option("--nli-fixture", gen.nli_fixture, "Offline NLI fixture JSON");
  cmd_generate->add_flag("--nli-heuristic", gen.nli_heuristic,
                         "Use the offline lexical NLI heuristic");
  cmd_generate->add_option("--gec-url", gen.gec_url,
                           "GEC backend base URL (or GEC_URL); identity when absent");
  cmd_generate->add_option("--seed", gen.seed, "Seed for NSI's random choice");
  cmd_generate->add_option("--tau", gen.tau, "Reversal threshold")->default_val(0.3);
  cmd_generate->add_option("--k", gen.k, "Causes candidates to request")->default_val(5);
  cmd_generate->add_option("--max-out", gen.max_out, "Retrieval bound")->default_val(20);
  cmd_generate->add_option("--trace", gen.trace_path, "Write trace JSON here");

  IndexArgs idx;
  auto* cmd_index = app.add_subcommand("index", "Build and persist a corpus index cache");
  cmd_index->add_option("--corpus", idx.corpus, "Corpus file")->required();
  cmd_index->add_option("--out", idx.out, "Cache file path")->required();

  EvalArgs ev;
  auto* cmd_eval = app.add_subcommand("eval", "Ratings bookkeeping");
  cmd_eval->add_option("--ratings", ev.ratings, "Ratings TSV")->required();
  cmd_eval->add_option("--game", ev.game, "Pairwise game SYSTEM_A:SYSTEM_B");
  cmd_eval->add_option("--criterion", ev.criterion,
                       "sarcasticness|creativity|humor|grammaticality");
  cmd_eval->add_flag("--correlate", ev.correlate,
                     "Correlate ratings with trace contradiction scores");
  cmd_eval->add_option("--system", ev.system, "System for --correlate");
  cmd_eval->add_option("--trace-dir", ev.trace_dir,
                       "Directory of <item_id>.json traces for --correlate");
  cmd_eval->add_flag("--json", ev.emit_json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (cmd_generate->parsed()) {
    if (gen.input.empty() && gen.input_file.empty()) {
      std::cerr << "error: one of --input or --input-file is required\n";
      return 1;
    }
    return run_generate(gen);
  }
  if (cmd_index->parsed()) return run_index(idx);
  if (cmd_eval->parsed()) return run_eval(ev);
  return 1;
}
