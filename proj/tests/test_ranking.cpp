#include "sarcgen/ranking.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "sarcgen/errors.hpp"
#include "support.hpp"

using namespace sarcgen;
using sarcgen::test::TempDir;
using sarcgen::test::data_file;
using sarcgen::test::default_resources;

namespace {

RetrievedContext ctx(std::string sentence, std::uint32_t id) {
  RetrievedContext c;
  c.sentence = std::move(sentence);
  c.source_id = id;
  return c;
}

// Backend keyed on the premise only, with call counting.
class MapNliClient : public NliClient {
public:
  explicit MapNliClient(std::map<std::string, double> contradiction_by_premise)
      : map_(std::move(contradiction_by_premise)) {}

  NliScores score(const std::string& premise, const std::string&) override {
    ++calls;
    const double c = map_.at(premise);
    return NliScores{(1.0 - c) / 2.0, (1.0 - c) / 2.0, c};
  }

  int calls = 0;

private:
  std::map<std::string, double> map_;
};

}  // namespace

TEST(NliScoresValidation, AcceptsWellFormed) {
  EXPECT_NO_THROW(validate(NliScores{0.05, 0.15, 0.80}));
  EXPECT_NO_THROW(validate(NliScores{1.0, 0.0, 0.0}));
}

TEST(NliScoresValidation, RejectsBadSumsAndRanges) {
  EXPECT_THROW(validate(NliScores{0.9, 0.4, 0.1}), BackendMalformed);   // sum 1.4
  EXPECT_THROW(validate(NliScores{0.5, 0.4, 0.2}), BackendMalformed);   // sum 1.1
  EXPECT_THROW(validate(NliScores{-0.1, 0.6, 0.5}), BackendMalformed);  // negative
  EXPECT_THROW(validate(NliScores{1.2, -0.1, -0.1}), BackendMalformed); // out of range
  EXPECT_THROW(validate(NliScores{0.4, 0.4, 0.1}), BackendMalformed);   // sum 0.9
}

TEST(FixtureNli, ExactPairThenPremiseThenDefault) {
  FixtureNliClient client(data_file("nli_fixture.json"));
  const auto exact = client.score("Stomach ache is just an additional side effect.",
                                  "I love getting sick from fast food.");
  EXPECT_DOUBLE_EQ(exact.contradiction, 0.92);

  const auto fallback = client.score("Completely unknown premise.", "Whatever.");
  EXPECT_DOUBLE_EQ(fallback.contradiction, 0.1);
}

TEST(FixtureNli, MissingEntryWithoutDefaultThrows) {
  TempDir tmp;
  const auto path = tmp.write("nli.json", R"({"pairs": []})");
  FixtureNliClient client(path);
  EXPECT_THROW(nli_scores(client, "premise", "hypothesis"), BackendMalformed);
}

TEST(NliScoresOp, EmptyTextsThrow) {
  FixtureNliClient client(data_file("nli_fixture.json"));
  EXPECT_THROW(nli_scores(client, "", "hypothesis"), EmptyInput);
  EXPECT_THROW(nli_scores(client, "premise", ""), EmptyInput);
}

TEST(HeuristicNli, IdenticalSentencesScoreLowContradiction) {
  const auto& r = default_resources();
  HeuristicNliClient client(r.sentiment, r.antonyms, r.stopwords);
  const auto scores = nli_scores(client, "I love it.", "I love it.");
  // shared lemma "love": raw = -1.
  const double expected = 0.8 / (1.0 + std::exp(1.0));
  EXPECT_NEAR(scores.contradiction, expected, 1e-12);
  EXPECT_LT(scores.contradiction, 0.5);
  EXPECT_DOUBLE_EQ(scores.neutral, 0.2);
  EXPECT_NEAR(scores.entailment + scores.neutral + scores.contradiction, 1.0, 1e-12);
}

TEST(HeuristicNli, AntonymPairRaisesContradiction) {
  const auto& r = default_resources();
  HeuristicNliClient client(r.sentiment, r.antonyms, r.stopwords);
  const auto scores = nli_scores(client, "I love it.", "I hate it.");
  // antonym pair love/hate: raw = +1.
  EXPECT_NEAR(scores.contradiction, 0.8 / (1.0 + std::exp(-1.0)), 1e-12);
  EXPECT_GT(scores.contradiction, 0.5);
}

TEST(HeuristicNli, NegationMismatchCounts) {
  const auto& r = default_resources();
  HeuristicNliClient client(r.sentiment, r.antonyms, r.stopwords);
  const auto with_neg = nli_scores(client, "The fog is not dark.", "The fog is dark.");
  // shared fog, dark (-2), negation mismatch (+1): raw = -1.
  EXPECT_NEAR(with_neg.contradiction, 0.8 / (1.0 + std::exp(1.0)), 1e-12);
  const auto same = nli_scores(client, "The fog is dark.", "The fog is dark.");
  EXPECT_GT(with_neg.contradiction, same.contradiction);
}

TEST(RankByIncongruity, SortsByContradiction) {
  MapNliClient client({{"a", 0.2}, {"b", 0.9}, {"c", 0.4}});
  const std::vector<RetrievedContext> contexts = {ctx("a", 0), ctx("b", 1), ctx("c", 2)};
  const auto ranked = rank_by_incongruity(client, contexts, "hypothesis");
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].context.sentence, "b");
  EXPECT_EQ(ranked[1].context.sentence, "c");
  EXPECT_EQ(ranked[2].context.sentence, "a");
}

TEST(RankByIncongruity, SingleContextSelected) {
  MapNliClient client({{"only", 0.01}});
  const auto ranked =
      rank_by_incongruity(client, std::vector<RetrievedContext>{ctx("only", 5)}, "h");
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].context.source_id, 5u);
}

TEST(RankByIncongruity, EmptyThrowsNoContext) {
  MapNliClient client({});
  EXPECT_THROW(rank_by_incongruity(client, std::vector<RetrievedContext>{}, "h"),
               NoContext);
}

TEST(RankByIncongruity, ScoresEveryContextExactlyOnce) {
  MapNliClient client({{"a", 0.2}, {"b", 0.9}, {"c", 0.4}, {"d", 0.5}});
  const std::vector<RetrievedContext> contexts = {ctx("a", 0), ctx("b", 1), ctx("c", 2),
                                                  ctx("d", 3)};
  rank_by_incongruity(client, contexts, "h");
  EXPECT_EQ(client.calls, 4);
}

TEST(RankByIncongruity, TieBreaksLengthLexicographicThenId) {
  MapNliClient client(
      {{"bbb", 0.5}, {"aa", 0.5}, {"ab", 0.5}, {"zz", 0.9}});
  const std::vector<RetrievedContext> contexts = {ctx("bbb", 0), ctx("ab", 1),
                                                  ctx("aa", 2), ctx("zz", 3)};
  const auto ranked = rank_by_incongruity(client, contexts, "h");
  EXPECT_EQ(ranked[0].context.sentence, "zz");   // highest contradiction
  EXPECT_EQ(ranked[1].context.sentence, "aa");   // shorter, then lexicographic
  EXPECT_EQ(ranked[2].context.sentence, "ab");
  EXPECT_EQ(ranked[3].context.sentence, "bbb");  // longest

  // Same sentence twice: lower source id first.
  MapNliClient dup_client({{"same", 0.5}});
  const std::vector<RetrievedContext> dups = {ctx("same", 7), ctx("same", 3)};
  const auto dup_ranked = rank_by_incongruity(dup_client, dups, "h");
  EXPECT_EQ(dup_ranked[0].context.source_id, 3u);
}

TEST(RankingProperties, HeadEqualsBruteForceMaxAndPermutationInvariant) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> n_dist(1, 50);
  std::uniform_int_distribution<int> score_dist(0, 10);
  std::uniform_int_distribution<std::size_t> len_dist(1, 6);

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = n_dist(rng);
    std::map<std::string, double> scores;
    std::vector<RetrievedContext> contexts;
    for (std::size_t i = 0; i < n; ++i) {
      std::string sentence(len_dist(rng), 'a');
      sentence += std::to_string(i);
      // Coarse score grid to force plenty of ties.
      scores[sentence] = score_dist(rng) / 10.0;
      contexts.push_back(ctx(sentence, static_cast<std::uint32_t>(i)));
    }
    MapNliClient client(scores);
    const auto ranked = rank_by_incongruity(client, contexts, "h");
    ASSERT_EQ(ranked.size(), n);

    // Brute-force max with the stated tie-break.
    const RetrievedContext* best = &contexts[0];
    double best_score = scores.at(contexts[0].sentence);
    for (const auto& c : contexts) {
      const double s = scores.at(c.sentence);
      const auto better = [&] {
        if (s != best_score) return s > best_score;
        if (c.sentence.size() != best->sentence.size()) {
          return c.sentence.size() < best->sentence.size();
        }
        if (c.sentence != best->sentence) return c.sentence < best->sentence;
        return c.source_id < best->source_id;
      };
      if (better()) {
        best = &c;
        best_score = s;
      }
    }
    EXPECT_EQ(ranked.front().context.sentence, best->sentence) << "trial " << trial;
    EXPECT_EQ(ranked.front().context.source_id, best->source_id);

    // Head contradiction dominates the rest.
    for (const auto& rc : ranked) {
      EXPECT_LE(rc.scores.contradiction, ranked.front().scores.contradiction);
    }

    // Permutation invariance.
    auto shuffled = contexts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    MapNliClient client2(scores);
    const auto ranked2 = rank_by_incongruity(client2, shuffled, "h");
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(ranked[i].context.sentence, ranked2[i].context.sentence);
      EXPECT_EQ(ranked[i].context.source_id, ranked2[i].context.source_id);
    }
  }
}
