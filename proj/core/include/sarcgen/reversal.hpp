#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sarcgen/lexicons.hpp"
#include "sarcgen/text.hpp"

namespace sarcgen {

enum class ReversalStrategy { AntonymSwap, NegationRemoval };

const char* to_string(ReversalStrategy s);

struct EvaluativeWord {
  std::size_t index = 0;
  std::string lemma;  // lowercase form that matched the lexicon
  double score = 0.0;
};

struct ReversalResult {
  Utterance reversed;
  ReversalStrategy strategy = ReversalStrategy::AntonymSwap;
  std::size_t edit_index = 0;
  std::string original_token;
  std::optional<std::string> replacement_token;  // absent for negation removal
};

// "not", or anything ending in n't (case-insensitive).
bool is_negation_token(std::string_view token);

// Among NOUN/VERB/ADJ/ADV tokens, the one with the highest aggregated
// negative score, requiring score >= tau and negative > positive. Ties go
// to the leftmost token.
std::optional<EvaluativeWord> find_evaluative_word(const Utterance& u,
                                                   const SentimentLexicon& lex,
                                                   double tau);

// One edit, ever: swap the evaluative word for its rank-1 antonym, else
// remove the leftmost negation (deleting "not", stripping "n't" in place).
// Throws NoReversalTarget when neither branch applies, AntonymMissing when
// an evaluative word exists but has no antonym and there is no negation.
ReversalResult reverse_valence(const Utterance& u, const SentimentLexicon& slex,
                               const AntonymLexicon& alex, const Tagger& tagger,
                               double tau);

}  // namespace sarcgen
