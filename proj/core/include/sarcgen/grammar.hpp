#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "sarcgen/text.hpp"

namespace sarcgen {

enum class Person { First, Second, Third, None };

const char* to_string(Person p);

struct PronounProfile {
  Person person = Person::None;  // person of the first pronoun in the input
  std::vector<std::string> pronouns;  // all pronoun tokens found, lowercased
};

PronounProfile pronoun_profile(const Utterance& input);

// Rewrites subject and possessive pronouns of the context that mismatch the
// input's person (to "I"/"my" when the input has none), re-inflecting an
// immediately following finite be/have/do. A capitalized non-initial NOUN
// directly before a finite be/have/do is treated like a subject pronoun.
// Token count never changes.
Utterance harmonize_pronouns(const Utterance& context, const PronounProfile& profile);

// Grammatical-error-correction backend.
class GecClient {
public:
  virtual ~GecClient() = default;
  virtual std::string correct(const std::string& sentence) = 0;
};

// Offline stub: {"pairs": {"broken sentence": "fixed sentence", ...}};
// sentences without an entry pass through unchanged.
class FixtureGecClient : public GecClient {
public:
  explicit FixtureGecClient(const std::filesystem::path& path);
  std::string correct(const std::string& sentence) override;

private:
  std::unordered_map<std::string, std::string> pairs_;
};

// POST {base_url}/v1/gec {"sentence": str} -> {"corrected": str}
class HttpGecClient : public GecClient {
public:
  explicit HttpGecClient(std::string base_url) : base_url_(std::move(base_url)) {}
  std::string correct(const std::string& sentence) override;

private:
  std::string base_url_;
};

// Identity when no backend is configured (client == nullptr).
std::string correct_grammar(GecClient* client, const std::string& sentence);

}  // namespace sarcgen
