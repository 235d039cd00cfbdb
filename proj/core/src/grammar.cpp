#include "sarcgen/grammar.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <unordered_set>

#include <json.hpp>

#include "sarcgen/errors.hpp"
#include "sarcgen/http.hpp"

namespace sarcgen {

namespace {

const std::unordered_map<std::string, Person>& pronoun_person() {
  static const std::unordered_map<std::string, Person> map = {
      {"i", Person::First},       {"me", Person::First},
      {"my", Person::First},      {"mine", Person::First},
      {"myself", Person::First},  {"we", Person::First},
      {"us", Person::First},      {"our", Person::First},
      {"ours", Person::First},    {"ourselves", Person::First},
      {"you", Person::Second},    {"your", Person::Second},
      {"yours", Person::Second},  {"yourself", Person::Second},
      {"yourselves", Person::Second},
      {"he", Person::Third},      {"him", Person::Third},
      {"his", Person::Third},     {"himself", Person::Third},
      {"she", Person::Third},     {"her", Person::Third},
      {"hers", Person::Third},    {"herself", Person::Third},
      {"it", Person::Third},      {"its", Person::Third},
      {"itself", Person::Third},  {"they", Person::Third},
      {"them", Person::Third},    {"their", Person::Third},
      {"theirs", Person::Third},  {"themselves", Person::Third}};
  return map;
}

// Rewrite sets deliberately exclude "it"/"its": dummy and object uses are
// indistinguishable from subjects without parsing, and rewriting them
// mangles sentences like "the thought of it makes me sick".
const std::unordered_set<std::string>& subject_pronouns() {
  static const std::unordered_set<std::string> set = {"i",  "we",  "you",
                                                      "he", "she", "they"};
  return set;
}

const std::unordered_set<std::string>& possessive_pronouns() {
  static const std::unordered_set<std::string> set = {"my",  "our", "your",
                                                      "his", "her", "their"};
  return set;
}

// Any pronoun form -> the subject form of the same referent.
std::string subject_of(const std::string& pronoun) {
  if (pronoun == "i" || pronoun == "me" || pronoun == "my" || pronoun == "mine" ||
      pronoun == "myself") return "i";
  if (pronoun == "we" || pronoun == "us" || pronoun == "our" || pronoun == "ours" ||
      pronoun == "ourselves") return "we";
  if (pronoun.rfind("you", 0) == 0) return "you";
  if (pronoun == "he" || pronoun == "him" || pronoun == "his" || pronoun == "himself")
    return "he";
  if (pronoun == "she" || pronoun == "her" || pronoun == "hers" || pronoun == "herself")
    return "she";
  if (pronoun == "they" || pronoun == "them" || pronoun == "their" ||
      pronoun == "theirs" || pronoun == "themselves") return "they";
  return "it";
}

// subject pronoun -> matching possessive
std::string possessive_of(const std::string& subject) {
  if (subject == "i") return "my";
  if (subject == "we") return "our";
  if (subject == "you") return "your";
  if (subject == "he") return "his";
  if (subject == "she") return "her";
  if (subject == "they") return "their";
  return "its";
}

struct AuxForm {
  enum class Verb { Be, Have, Do } verb;
  bool past;
};

std::optional<AuxForm> aux_form(const std::string& lowered) {
  if (lowered == "am" || lowered == "is" || lowered == "are")
    return AuxForm{AuxForm::Verb::Be, false};
  if (lowered == "was" || lowered == "were") return AuxForm{AuxForm::Verb::Be, true};
  if (lowered == "have" || lowered == "has") return AuxForm{AuxForm::Verb::Have, false};
  if (lowered == "had") return AuxForm{AuxForm::Verb::Have, true};
  if (lowered == "do" || lowered == "does") return AuxForm{AuxForm::Verb::Do, false};
  if (lowered == "did") return AuxForm{AuxForm::Verb::Do, true};
  return std::nullopt;
}

// Agreement table for be/have/do given the new subject.
std::string inflect_aux(const AuxForm& form, const std::string& subject) {
  const bool third_sg = subject == "he" || subject == "she" || subject == "it";
  const bool first_sg = subject == "i";
  switch (form.verb) {
    case AuxForm::Verb::Be:
      if (form.past) return (first_sg || third_sg) ? "was" : "were";
      if (first_sg) return "am";
      return third_sg ? "is" : "are";
    case AuxForm::Verb::Have:
      if (form.past) return "had";
      return third_sg ? "has" : "have";
    case AuxForm::Verb::Do:
      if (form.past) return "did";
      return third_sg ? "does" : "do";
  }
  return subject;  // unreachable
}

std::string apply_case(const std::string& replacement, const std::string& original,
                       bool sentence_initial) {
  if (replacement == "i") return "I";
  std::string out = replacement;
  const bool was_capital =
      !original.empty() && std::isupper(static_cast<unsigned char>(original.front()));
  if ((sentence_initial || was_capital) && !out.empty()) {
    out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  }
  return out;
}

}  // namespace

const char* to_string(Person p) {
  switch (p) {
    case Person::First: return "FIRST";
    case Person::Second: return "SECOND";
    case Person::Third: return "THIRD";
    case Person::None: return "NONE";
  }
  return "NONE";
}

PronounProfile pronoun_profile(const Utterance& input) {
  PronounProfile profile;
  for (const auto& tok : input.tokens) {
    const std::string lowered = to_lower(tok);
    auto it = pronoun_person().find(lowered);
    if (it == pronoun_person().end()) continue;
    if (profile.person == Person::None) profile.person = it->second;
    profile.pronouns.push_back(lowered);
  }
  return profile;
}

Utterance harmonize_pronouns(const Utterance& context, const PronounProfile& profile) {
  const Person target = profile.person == Person::None ? Person::First : profile.person;

  // Target forms. For a third-person input, reuse the input's own pronoun
  // where one exists instead of guessing a gender.
  std::string target_subject = "i";
  if (target == Person::Second) target_subject = "you";
  if (target == Person::Third) {
    target_subject = "it";
    for (const auto& p : profile.pronouns) {
      if (pronoun_person().at(p) == Person::Third) {
        target_subject = subject_of(p);
        break;
      }
    }
  }
  const std::string target_possessive = possessive_of(target_subject);

  Utterance out = context;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const std::string lowered = to_lower(out.tokens[i]);
    bool rewrite_subject = false;

    if (subject_pronouns().count(lowered) > 0 &&
        pronoun_person().at(lowered) != target) {
      rewrite_subject = true;
    } else if (possessive_pronouns().count(lowered) > 0 &&
               pronoun_person().at(lowered) != target) {
      out.tokens[i] = apply_case(target_possessive, out.tokens[i], i == 0);
      out.tags[i] = PosTag::Pron;
      continue;
    } else if (i > 0 && out.tags[i] == PosTag::Noun && !out.tokens[i].empty() &&
               std::isupper(static_cast<unsigned char>(out.tokens[i].front()))) {
      // Proper name in subject position: only when a finite be/have/do
      // follows, to avoid clobbering ordinary capitalized nouns.
      if (i + 1 < out.tokens.size() && aux_form(to_lower(out.tokens[i + 1]))) {
        rewrite_subject = true;
      }
    }

    if (!rewrite_subject) continue;
    out.tokens[i] = apply_case(target_subject, out.tokens[i], i == 0);
    out.tags[i] = PosTag::Pron;
    if (i + 1 < out.tokens.size()) {
      if (auto form = aux_form(to_lower(out.tokens[i + 1]))) {
        out.tokens[i + 1] = inflect_aux(*form, target_subject);
      }
    }
  }
  out.surface = detokenize(out.tokens);
  return out;
}

FixtureGecClient::FixtureGecClient(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open gec fixture: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("gec fixture " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_object()) {
    throw ConfigError("gec fixture " + path.string() + ": missing pairs object");
  }
  for (const auto& [key, value] : doc["pairs"].items()) {
    if (!value.is_string()) {
      throw ConfigError("gec fixture " + path.string() + ": non-string correction");
    }
    pairs_[key] = value.get<std::string>();
  }
}

std::string FixtureGecClient::correct(const std::string& sentence) {
  auto it = pairs_.find(sentence);
  return it == pairs_.end() ? sentence : it->second;
}

std::string HttpGecClient::correct(const std::string& sentence) {
  nlohmann::json request = {{"sentence", sentence}};
  auto res = http_post_json(base_url_, "/v1/gec", request.dump());
  if (res.status != 200) {
    throw BackendUnavailable("gec backend returned status " + std::to_string(res.status));
  }
  nlohmann::json doc = nlohmann::json::parse(res.body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("corrected") ||
      !doc["corrected"].is_string()) {
    throw BackendMalformed("gec backend: response missing corrected string");
  }
  return doc["corrected"].get<std::string>();
}

std::string correct_grammar(GecClient* client, const std::string& sentence) {
  if (sentence.empty()) {
    throw EmptyInput("correct_grammar: empty sentence");
  }
  return client == nullptr ? sentence : client->correct(sentence);
}

}  // namespace sarcgen
