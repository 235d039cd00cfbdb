#include "sarcgen/reversal.hpp"

#include <cctype>

#include "sarcgen/errors.hpp"

namespace sarcgen {

namespace {

bool is_content_tag(PosTag t) {
  return t == PosTag::Noun || t == PosTag::Verb || t == PosTag::Adj || t == PosTag::Adv;
}

// The lowercase form the lexicon actually matched: exact, else strip-s.
std::string matched_lemma(const SentimentLexicon& lex, const std::string& token,
                          PosTag pos) {
  std::string lowered = to_lower(token);
  if (lex.scores(lowered, pos).negative > 0.0 || lex.scores(lowered, pos).positive > 0.0) {
    return lowered;
  }
  if (lowered.size() >= 3 && lowered.back() == 's') {
    std::string stripped = lowered.substr(0, lowered.size() - 1);
    const auto s = lex.scores(stripped, pos);
    if (s.negative > 0.0 || s.positive > 0.0) return stripped;
  }
  return lowered;
}

std::string match_capitalization(const std::string& original, std::string replacement) {
  if (!original.empty() && !replacement.empty() &&
      std::isupper(static_cast<unsigned char>(original.front()))) {
    replacement.front() =
        static_cast<char>(std::toupper(static_cast<unsigned char>(replacement.front())));
  }
  return replacement;
}

Utterance rebuild(std::vector<std::string> tokens, const Tagger& tagger) {
  Utterance u;
  u.tokens = std::move(tokens);
  u.tags = tagger.tag(u.tokens);
  u.surface = detokenize(u.tokens);
  return u;
}

}  // namespace

const char* to_string(ReversalStrategy s) {
  return s == ReversalStrategy::AntonymSwap ? "ANTONYM_SWAP" : "NEGATION_REMOVAL";
}

bool is_negation_token(std::string_view token) {
  const std::string lowered = to_lower(token);
  if (lowered == "not") return true;
  return lowered.size() > 3 && lowered.compare(lowered.size() - 3, 3, "n't") == 0;
}

std::optional<EvaluativeWord> find_evaluative_word(const Utterance& u,
                                                   const SentimentLexicon& lex,
                                                   double tau) {
  std::optional<EvaluativeWord> best;
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    if (!is_content_tag(u.tags[i])) continue;
    const auto s = lex.lookup(u.tokens[i], u.tags[i]);
    if (s.negative < tau || s.negative <= s.positive) continue;
    if (!best || s.negative > best->score) {
      best = EvaluativeWord{i, matched_lemma(lex, u.tokens[i], u.tags[i]), s.negative};
    }
  }
  return best;
}

ReversalResult reverse_valence(const Utterance& u, const SentimentLexicon& slex,
                               const AntonymLexicon& alex, const Tagger& tagger,
                               double tau) {
  const auto evaluative = find_evaluative_word(u, slex, tau);

  if (evaluative) {
    const auto antonyms = alex.antonyms(u.tokens[evaluative->index], u.tags[evaluative->index]);
    if (!antonyms.empty()) {
      ReversalResult result;
      result.strategy = ReversalStrategy::AntonymSwap;
      result.edit_index = evaluative->index;
      result.original_token = u.tokens[evaluative->index];
      result.replacement_token = match_capitalization(result.original_token, antonyms.front());

      auto tokens = u.tokens;
      tokens[evaluative->index] = *result.replacement_token;
      result.reversed = rebuild(std::move(tokens), tagger);
      return result;
    }
  }

  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    if (!is_negation_token(u.tokens[i])) continue;
    ReversalResult result;
    result.strategy = ReversalStrategy::NegationRemoval;
    result.edit_index = i;
    result.original_token = u.tokens[i];

    auto tokens = u.tokens;
    if (to_lower(tokens[i]) == "not") {
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      tokens[i] = tokens[i].substr(0, tokens[i].size() - 3);  // isn't -> is
    }
    result.reversed = rebuild(std::move(tokens), tagger);
    return result;
  }

  if (evaluative) {
    throw AntonymMissing("no antonym for evaluative word '" +
                         u.tokens[evaluative->index] + "' and no negation present");
  }
  throw NoReversalTarget("no negative-polarity word above threshold and no negation");
}

}  // namespace sarcgen
