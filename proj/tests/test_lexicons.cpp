#include "sarcgen/lexicons.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sarcgen/errors.hpp"
#include "support.hpp"

using namespace sarcgen;
using sarcgen::test::TempDir;
using sarcgen::test::default_resources;

TEST(SentimentLexicon, ShippedFixtureValues) {
  const auto& lex = default_resources().sentiment;
  EXPECT_DOUBLE_EQ(lex.scores("hate", PosTag::Verb).negative, 0.75);
  EXPECT_DOUBLE_EQ(lex.scores("difficult", PosTag::Adj).negative, 0.5);
  EXPECT_DOUBLE_EQ(lex.scores("able", PosTag::Adj).positive, 0.125);
  EXPECT_DOUBLE_EQ(lex.scores("able", PosTag::Adj).negative, 0.0);
}

TEST(SentimentLexicon, UnknownWordScoresZero) {
  const auto& lex = default_resources().sentiment;
  EXPECT_DOUBLE_EQ(lex.negative_score("xyzzy", PosTag::Noun), 0.0);
  EXPECT_DOUBLE_EQ(lex.scores("hate", PosTag::Noun).negative, 0.0);  // wrong POS
}

TEST(SentimentLexicon, CommentOnlyFileIsEmpty) {
  TempDir tmp;
  const auto path = tmp.write("lex.tsv", "# just a comment\n# another\n");
  const auto lex = SentimentLexicon::load(path);
  EXPECT_EQ(lex.size(), 0u);
  EXPECT_DOUBLE_EQ(lex.negative_score("anything", PosTag::Adj), 0.0);
}

TEST(SentimentLexicon, RankWeightedAggregation) {
  const auto& lex = default_resources().sentiment;
  // bleak: senses ranked 1 and 2 with neg 0.6 and 0.0.
  EXPECT_NEAR(lex.scores("bleak", PosTag::Adj).negative,
              (1.0 * 0.6 + 0.5 * 0.0) / 1.5, 1e-9);
  // cold (adj): neg (0.25, 0.5), pos (0, 0.125) at ranks 1, 2.
  EXPECT_NEAR(lex.scores("cold", PosTag::Adj).negative,
              (1.0 * 0.25 + 0.5 * 0.5) / 1.5, 1e-9);
  EXPECT_NEAR(lex.scores("cold", PosTag::Adj).positive,
              (1.0 * 0.0 + 0.5 * 0.125) / 1.5, 1e-9);
  // capable appears at rank 2 in one synset and rank 1 in another.
  EXPECT_NEAR(lex.scores("capable", PosTag::Adj).positive,
              (1.0 * 0.25 + 0.5 * 0.125) / 1.5, 1e-9);
}

TEST(SentimentLexicon, StripSLookupFallback) {
  const auto& lex = default_resources().sentiment;
  EXPECT_DOUBLE_EQ(lex.lookup("genes", PosTag::Noun).negative, 0.0);
  EXPECT_EQ(lex.lemma_pos("gene"), PosTag::Noun);
  // "hates" resolves through hate.
  EXPECT_DOUBLE_EQ(lex.lookup("hates", PosTag::Verb).negative, 0.75);
  EXPECT_DOUBLE_EQ(lex.lookup("HATE", PosTag::Verb).negative, 0.75);
}

TEST(SentimentLexicon, MultiPosPrecedenceIsNounVerbAdjAdv) {
  const auto& lex = default_resources().sentiment;
  // "mean" has verb and adjective entries; verb outranks adjective.
  EXPECT_EQ(lex.lemma_pos("mean"), PosTag::Verb);
  // "cold" has noun and adjective entries; noun wins.
  EXPECT_EQ(lex.lemma_pos("cold"), PosTag::Noun);
}

TEST(SentimentLexicon, MalformedRowsReportLineNumbers) {
  TempDir tmp;
  const auto wrong_fields = tmp.write("a.tsv", "a\t00000001\t0.5\tgloss\n");
  try {
    SentimentLexicon::load(wrong_fields);
    FAIL() << "expected LexiconParseError";
  } catch (const LexiconParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }

  const auto bad_pos = tmp.write(
      "b.tsv", "a\t00000001\t0\t0\tfine#1\tok\nx\t00000002\t0\t0\tbad#1\tgloss\n");
  try {
    SentimentLexicon::load(bad_pos);
    FAIL() << "expected LexiconParseError";
  } catch (const LexiconParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }

  const auto bad_score = tmp.write("c.tsv", "a\t00000001\tnope\t0\tword#1\tgloss\n");
  EXPECT_THROW(SentimentLexicon::load(bad_score), LexiconParseError);

  const auto out_of_range = tmp.write("d.tsv", "a\t00000001\t0.9\t0.9\tword#1\tgloss\n");
  EXPECT_THROW(SentimentLexicon::load(out_of_range), LexiconParseError);

  const auto bad_rank = tmp.write("e.tsv", "a\t00000001\t0\t0\tword#zero\tgloss\n");
  EXPECT_THROW(SentimentLexicon::load(bad_rank), LexiconParseError);
}

TEST(SentimentLexicon, DuplicateSenseRowsLastOneWins) {
  TempDir tmp;
  const auto path = tmp.write("dup.tsv",
                              "a\t00000001\t0\t0.8\tword#1\tfirst\n"
                              "a\t00000001\t0\t0.2\tword#1\tsecond\n");
  const auto lex = SentimentLexicon::load(path);
  EXPECT_DOUBLE_EQ(lex.scores("word", PosTag::Adj).negative, 0.2);
}

TEST(SentimentLexicon, LoadingIsOrderIndependent) {
  TempDir tmp;
  const std::string row_a = "a\t00000001\t0\t0.6\talpha#1\tg\n";
  const std::string row_b = "v\t00000002\t0.5\t0\tbeta#1\tg\n";
  const std::string row_c = "a\t00000003\t0\t0.1\talpha#2\tg\n";
  const auto forward = SentimentLexicon::load(tmp.write("f.tsv", row_a + row_b + row_c));
  const auto backward = SentimentLexicon::load(tmp.write("g.tsv", row_c + row_b + row_a));
  EXPECT_DOUBLE_EQ(forward.scores("alpha", PosTag::Adj).negative,
                   backward.scores("alpha", PosTag::Adj).negative);
  EXPECT_DOUBLE_EQ(forward.scores("beta", PosTag::Verb).positive,
                   backward.scores("beta", PosTag::Verb).positive);
}

TEST(SentimentLexicon, AggregateBoundedByMaxSenseScore) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> score(0.0, 0.5);
  std::uniform_int_distribution<int> senses(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SentimentLexicon::SenseRow> rows;
    double max_neg = 0.0;
    const int n = senses(rng);
    for (int rank = 1; rank <= n; ++rank) {
      const double neg = score(rng);
      max_neg = std::max(max_neg, neg);
      rows.push_back({"word", PosTag::Adj, rank, 0.0, neg});
    }
    const auto lex = SentimentLexicon::from_rows(rows);
    const double agg = lex.scores("word", PosTag::Adj).negative;
    EXPECT_GE(agg, 0.0);
    EXPECT_LE(agg, max_neg + 1e-12);
  }
}

TEST(AntonymLexicon, ShippedEntries) {
  const auto& lex = default_resources().antonyms;
  const auto hate = lex.antonyms("hate", PosTag::Verb);
  ASSERT_FALSE(hate.empty());
  EXPECT_EQ(hate.front(), "love");

  const auto difficult = lex.antonyms("difficult", PosTag::Adj);
  ASSERT_FALSE(difficult.empty());
  EXPECT_EQ(difficult.front(), "easy");

  EXPECT_TRUE(lex.antonyms("xyzzy", PosTag::Noun).empty());
}

TEST(AntonymLexicon, RankOrderingAndStripS) {
  const auto& lex = default_resources().antonyms;
  const auto unfavorable = lex.antonyms("unfavorable", PosTag::Adj);
  ASSERT_EQ(unfavorable.size(), 2u);
  EXPECT_EQ(unfavorable[0], "great");
  EXPECT_EQ(unfavorable[1], "favorable");
  // "hates" resolves through "hate".
  EXPECT_FALSE(lex.antonyms("hates", PosTag::Verb).empty());
}

TEST(AntonymLexicon, NeverContainsSelf) {
  const auto& lex = default_resources().antonyms;
  for (const char* word : {"hate", "love", "difficult", "easy", "gross", "ugly"}) {
    for (PosTag pos : {PosTag::Verb, PosTag::Adj}) {
      const auto list = lex.antonyms(word, pos);
      EXPECT_EQ(std::find(list.begin(), list.end(), word), list.end()) << word;
    }
  }
}

TEST(AntonymLexicon, RejectsSelfAntonymAndDuplicateRank) {
  TempDir tmp;
  const auto self_row = tmp.write("s.tsv", "good\ta\tgood\t1\n");
  EXPECT_THROW(AntonymLexicon::load(self_row), LexiconParseError);

  const auto dup_rank = tmp.write("d.tsv", "good\ta\tbad\t1\ngood\ta\tpoor\t1\n");
  try {
    AntonymLexicon::load(dup_rank);
    FAIL() << "expected LexiconParseError";
  } catch (const LexiconParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}
