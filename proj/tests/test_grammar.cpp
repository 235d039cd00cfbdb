#include "sarcgen/grammar.hpp"

#include <gtest/gtest.h>

#include "sarcgen/errors.hpp"
#include "support.hpp"

using namespace sarcgen;
using sarcgen::test::TempDir;
using sarcgen::test::data_file;
using sarcgen::test::default_resources;

namespace {

Utterance tok(const std::string& text) {
  return tokenize(text, default_resources().tagger());
}

PronounProfile profile_of(const std::string& text) { return pronoun_profile(tok(text)); }

std::string harmonized(const std::string& context, const std::string& input) {
  return harmonize_pronouns(tok(context), profile_of(input)).surface;
}

}  // namespace

TEST(PronounProfile, DetectsPersonAndTokens) {
  const auto first = profile_of("I hate getting sick from fast food.");
  EXPECT_EQ(first.person, Person::First);
  EXPECT_EQ(first.pronouns, (std::vector<std::string>{"i"}));

  const auto none = profile_of("Burnt popcorn is gross.");
  EXPECT_EQ(none.person, Person::None);
  EXPECT_TRUE(none.pronouns.empty());

  const auto third = profile_of("It is not fun to date a drug addict.");
  EXPECT_EQ(third.person, Person::Third);

  const auto possessive = profile_of("I inherited unfavorable genes from my mother.");
  EXPECT_EQ(possessive.person, Person::First);
  EXPECT_EQ(possessive.pronouns, (std::vector<std::string>{"i", "my"}));
}

TEST(HarmonizePronouns, ThirdToFirstWithAuxAgreement) {
  EXPECT_EQ(harmonized("He has never suffered the torment of rejection.",
                       "Ignoring texts is literally the worst part of communication."),
            "I have never suffered the torment of rejection.");
}

TEST(HarmonizePronouns, BeVerbReInflects) {
  EXPECT_EQ(harmonized("She is never on time.", "Burnt popcorn is gross."),
            "I am never on time.");
}

TEST(HarmonizePronouns, MatchingPersonUnchanged) {
  EXPECT_EQ(harmonized("I ate too much and got a terrible stomach ache.",
                       "I hate getting sick from fast food."),
            "I ate too much and got a terrible stomach ache.");
}

TEST(HarmonizePronouns, PossessiveRewrites) {
  EXPECT_EQ(harmonized("His dog was barking all night.", "I hate the noise."),
            "My dog was barking all night.");
}

TEST(HarmonizePronouns, ThirdPersonInputKeepsThirdContext) {
  EXPECT_EQ(harmonized("Spent the night in a police cell after his arrest.",
                       "It is not fun to date a drug addict."),
            "Spent the night in a police cell after his arrest.");
}

TEST(HarmonizePronouns, ItIsNeverRewritten) {
  EXPECT_EQ(harmonized("The very thought of it makes me feel sick.",
                       "Burnt popcorn is gross."),
            "The very thought of it makes me feel sick.");
}

TEST(HarmonizePronouns, ObjectPronounsLeftAlone) {
  EXPECT_EQ(harmonized("The smell made me want to vomit.", "Burnt popcorn is gross."),
            "The smell made me want to vomit.");
}

TEST(HarmonizePronouns, LexicalVerbsAreNotReinflected) {
  // Only be/have/do are in the agreement table; "makes" stays put and the
  // GEC backend is expected to clean it up.
  EXPECT_EQ(harmonized("She makes me feel dowdy and ugly.",
                       "I inherited unfavorable genes from my mother."),
            "I makes me feel dowdy and ugly.");
}

TEST(HarmonizePronouns, SecondPersonTarget) {
  EXPECT_EQ(harmonized("He has a plan.", "You should stay away."), "You have a plan.");
}

TEST(HarmonizePronouns, ProperNameActsLikeSubjectPronoun) {
  // A capitalized non-initial NOUN before a finite be/have/do.
  Utterance context;
  context.tokens = {"I", "heard", "Mother", "has", "a", "plan", "."};
  context.tags = {PosTag::Pron, PosTag::Other, PosTag::Noun, PosTag::Other,
                  PosTag::Other, PosTag::Noun, PosTag::Other};
  context.surface = "I heard Mother has a plan.";
  PronounProfile profile;
  profile.person = Person::None;
  const auto out = harmonize_pronouns(context, profile);
  EXPECT_EQ(out.surface, "I heard I have a plan.");
}

TEST(HarmonizePronouns, TokenCountPreserved) {
  for (const char* context : {"He has never suffered the torment of rejection.",
                              "She makes me feel dowdy and ugly.",
                              "His dog was barking all night."}) {
    const auto before = tok(context);
    const auto after = harmonize_pronouns(before, profile_of("Burnt popcorn is gross."));
    EXPECT_EQ(before.tokens.size(), after.tokens.size()) << context;
  }
}

TEST(HarmonizePronouns, Idempotent) {
  const auto profile = profile_of("Burnt popcorn is gross.");
  for (const char* context : {"He has never suffered the torment of rejection.",
                              "She is never on time.",
                              "They were late again.",
                              "His dog was barking all night."}) {
    const auto once = harmonize_pronouns(tok(context), profile);
    const auto twice = harmonize_pronouns(once, profile);
    EXPECT_EQ(once.tokens, twice.tokens) << context;
  }
}

TEST(CorrectGrammar, IdentityWithoutBackend) {
  EXPECT_EQ(correct_grammar(nullptr, "I have never suffered."),
            "I have never suffered.");
}

TEST(CorrectGrammar, EmptySentenceThrows) {
  EXPECT_THROW(correct_grammar(nullptr, ""), EmptyInput);
}

TEST(FixtureGec, MapsKnownSentencesIdentityOtherwise) {
  FixtureGecClient gec(data_file("gec_fixture.json"));
  EXPECT_EQ(correct_grammar(&gec, "I has a dog."), "I have a dog.");
  EXPECT_EQ(correct_grammar(&gec, "Nothing matches this."), "Nothing matches this.");
}
