#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sarcgen/pipeline.hpp"
#include "sarcgen/reversal.hpp"

namespace {

using namespace sarcgen;

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(SARCGEN_DATA_DIR) / name;
}

const Resources& resources() {
  static const Resources r = [] {
    ResourcePaths paths;
    paths.sentiment_lexicon = data_file("sentiment_lexicon.tsv");
    paths.antonym_lexicon = data_file("antonyms.tsv");
    paths.stopwords = data_file("stopwords.txt");
    paths.corpus = data_file("corpus.txt");
    return Resources::load(paths);
  }();
  return r;
}

std::vector<std::string> synthetic_corpus(std::size_t n) {
  static const std::vector<std::string> vocab = {
      "fog",  "food", "ache", "storm", "dark", "day",  "night", "accident",
      "rain", "snow", "the",  "a",     "is",   "near", "cold",  "stomach"};
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> len(4, 10);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::vector<std::string> lines;
  lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    const std::size_t k = len(rng);
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) line += ' ';
      line += vocab[word(rng)];
    }
    line += '.';
    lines.push_back(line);
  }
  return lines;
}

void BM_Tokenize(benchmark::State& state) {
  const auto tagger = resources().tagger();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tokenize("Zero visibility in fog makes driving difficult.", tagger));
  }
}
BENCHMARK(BM_Tokenize);

void BM_ReverseValence(benchmark::State& state) {
  const auto& r = resources();
  const auto tagger = r.tagger();
  const auto u = tokenize("I hate getting sick from fast food.", tagger);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reverse_valence(u, r.sentiment, r.antonyms, tagger, 0.3));
  }
}
BENCHMARK(BM_ReverseValence);

void BM_IndexBuild(benchmark::State& state) {
  const auto lines = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CorpusIndex::build_from_lines(lines));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IndexBuild)->Arg(1000)->Arg(10000);

void BM_RetrieveContexts(benchmark::State& state) {
  const auto lines = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  const auto index = CorpusIndex::build_from_lines(lines);
  ConceptPhrase phrase;
  phrase.text = "stomach ache";
  phrase.source = {"stomach ache", 1.0};
  phrase.nouns = {"stomach", "ache"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(retrieve_contexts(index, phrase, 8, 20));
  }
}
BENCHMARK(BM_RetrieveContexts)->Arg(1000)->Arg(10000);

void BM_HeuristicNli(benchmark::State& state) {
  const auto& r = resources();
  HeuristicNliClient client(r.sentiment, r.antonyms, r.stopwords);
  for (auto _ : state) {
    benchmark::DoNotOptimize(client.score("Stomach ache is just an additional side effect.",
                                          "I love getting sick from fast food."));
  }
}
BENCHMARK(BM_HeuristicNli);

void BM_GenerateRv(benchmark::State& state) {
  FixtureCausesClient causes(data_file("causes_fixture.json"));
  FixtureNliClient nli(data_file("nli_fixture.json"));
  const Backends backends{&causes, &nli, nullptr};
  SystemConfig config;
  config.system = System::RV;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate("I hate getting sick from fast food.", config, resources(), backends));
  }
}
BENCHMARK(BM_GenerateRv);

void BM_GenerateFm(benchmark::State& state) {
  FixtureCausesClient causes(data_file("causes_fixture.json"));
  FixtureNliClient nli(data_file("nli_fixture.json"));
  const Backends backends{&causes, &nli, nullptr};
  SystemConfig config;
  config.system = System::FM;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate("I hate getting sick from fast food.", config, resources(), backends));
  }
}
BENCHMARK(BM_GenerateFm);

}  // namespace

BENCHMARK_MAIN();
