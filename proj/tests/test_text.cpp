#include "sarcgen/text.hpp"

#include <gtest/gtest.h>

#include "sarcgen/errors.hpp"
#include "sarcgen/lexicons.hpp"
#include "support.hpp"

using namespace sarcgen;
using sarcgen::test::default_resources;

namespace {

Utterance tok(const std::string& text) {
  const auto tagger = default_resources().tagger();
  return tokenize(text, tagger);
}

}  // namespace

TEST(Tokenize, SplitsPunctuation) {
  const auto u = tok("I hate it.");
  EXPECT_EQ(u.tokens, (std::vector<std::string>{"I", "hate", "it", "."}));
}

TEST(Tokenize, KeepsContractionsWhole) {
  const auto u = tok("It isn't fun.");
  EXPECT_EQ(u.tokens, (std::vector<std::string>{"It", "isn't", "fun", "."}));
}

TEST(Tokenize, BlankInputThrows) {
  EXPECT_THROW(tok(""), EmptyInput);
  EXPECT_THROW(tok("   \t "), EmptyInput);
}

TEST(Tokenize, TagsMatchTokenCount) {
  const auto u = tok("Zero visibility in fog makes driving difficult.");
  EXPECT_EQ(u.tokens.size(), u.tags.size());
}

TEST(Tokenize, StripsSurroundingWhitespaceIntoSurface) {
  const auto u = tok("  I hate it.  ");
  EXPECT_EQ(u.surface, "I hate it.");
}

TEST(Detokenize, JoinsWithPunctuationRules) {
  const std::vector<std::string> tokens{"I", "love", "it", "."};
  EXPECT_EQ(detokenize(tokens), "I love it.");
}

TEST(Detokenize, CapitalizesAndTerminates) {
  const std::vector<std::string> tokens{"it", "is", "fun"};
  EXPECT_EQ(detokenize(tokens), "It is fun.");
}

TEST(Detokenize, EmptyThrows) {
  EXPECT_THROW(detokenize(std::vector<std::string>{}), EmptyInput);
}

TEST(Detokenize, SemicolonStaysAttached) {
  const std::vector<std::string> tokens{"stop", ";", "it", "is", "late", "."};
  EXPECT_EQ(detokenize(tokens), "Stop; it is late.");
}

TEST(ContentTerms, RunningExample) {
  const auto u = tok("Zero visibility in fog makes driving difficult.");
  const auto terms = content_terms(u, default_resources().stopwords);
  EXPECT_EQ(terms, (std::vector<std::string>{"zero", "visibility", "fog", "makes",
                                             "driving", "difficult"}));
}

TEST(ContentTerms, OnlyStopwordsYieldNothing) {
  const auto u = tok("It is the.");
  EXPECT_TRUE(content_terms(u, default_resources().stopwords).empty());
}

TEST(ContentTerms, FastFoodExample) {
  const auto u = tok("I hate getting sick from fast food.");
  const auto terms = content_terms(u, default_resources().stopwords);
  EXPECT_EQ(terms,
            (std::vector<std::string>{"hate", "getting", "sick", "fast", "food"}));
}

TEST(ContentTerms, DeduplicatesKeepingFirst) {
  const auto u = tok("Fog and fog and fog.");
  const auto terms = content_terms(u, default_resources().stopwords);
  EXPECT_EQ(terms, (std::vector<std::string>{"fog"}));
}

// Properties over generated sentences.

namespace {

std::string random_sentence(std::mt19937& rng) {
  static const std::vector<std::string> words = {
      "I",    "hate",  "love", "the",  "fog",   "food", "it",  "is",
      "not",  "fast",  "sick", "fun",  "gross", "zero", "a",   "driving",
      "isn't", "makes", "mother", "great"};
  std::uniform_int_distribution<std::size_t> len(1, 10);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> punct(0, 3);
  std::string s;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) s += ' ';
    s += words[pick(rng)];
  }
  if (punct(rng) == 0) s += '!';
  if (punct(rng) == 1) s += '.';
  return s;
}

}  // namespace

TEST(TextProperties, DetokenizeTokenizeIsIdempotentAfterOneApplication) {
  const auto tagger = default_resources().tagger();
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_sentence(rng);
    const auto once = detokenize(tokenize(s, tagger).tokens);
    const auto twice = detokenize(tokenize(once, tagger).tokens);
    EXPECT_EQ(once, twice) << "input: " << s;
  }
}

TEST(TextProperties, ContentTermsAreSubsetInOrderWithoutStopwords) {
  const auto& stop = default_resources().stopwords;
  const auto tagger = default_resources().tagger();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = tokenize(random_sentence(rng), tagger);
    const auto terms = content_terms(u, stop);

    std::vector<std::string> lowered;
    for (const auto& t : u.tokens) lowered.push_back(to_lower(t));
    std::size_t cursor = 0;
    for (const auto& term : terms) {
      EXPECT_FALSE(stop.contains(term));
      // Each term appears in the remaining suffix, preserving order.
      auto it = std::find(lowered.begin() + static_cast<std::ptrdiff_t>(cursor),
                          lowered.end(), term);
      ASSERT_NE(it, lowered.end()) << term;
      cursor = static_cast<std::size_t>(it - lowered.begin());
    }
  }
}

TEST(TextProperties, TaggerAlwaysCoversEveryToken) {
  const auto tagger = default_resources().tagger();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tokens = split_tokens(random_sentence(rng));
    EXPECT_EQ(tagger.tag(tokens).size(), tokens.size());
  }
}
