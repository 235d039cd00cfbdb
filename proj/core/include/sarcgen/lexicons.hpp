#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sarcgen/text.hpp"

namespace sarcgen {

struct SentimentScores {
  double positive = 0.0;
  double negative = 0.0;
};

// Word-level sentiment scores aggregated from a SentiWordNet-3.0-style TSV:
//   POS(a|n|v|r) \t ID \t PosScore \t NegScore \t SynsetTerms \t Gloss
// SynsetTerms is a space-separated list of "lemma#rank". Lines starting
// with '#' are ignored. Per (lemma, pos) the sense scores are averaged with
// weight 1/rank; a later row for the same (lemma, pos, rank) overwrites an
// earlier one. Unknown keys score (0, 0).
class SentimentLexicon {
public:
  struct SenseRow {
    std::string lemma;  // lowercase
    PosTag pos = PosTag::Other;
    int rank = 1;
    double positive = 0.0;
    double negative = 0.0;
  };

  SentimentLexicon() = default;

  static SentimentLexicon load(const std::filesystem::path& path);
  static SentimentLexicon from_rows(std::span<const SenseRow> rows);

  // Exact (lemma, pos) lookup; lemma must already be lowercase.
  SentimentScores scores(std::string_view lemma, PosTag pos) const;

  // Token-level lookup: lowercases, tries the exact form, then the form
  // with one trailing 's' stripped.
  SentimentScores lookup(std::string_view token, PosTag pos) const;
  double negative_score(std::string_view token, PosTag pos) const;

  // POS of a lowercase lemma under the fixed precedence
  // NOUN > VERB > ADJ > ADV; nullopt when the lemma is unknown.
  std::optional<PosTag> lemma_pos(std::string_view lemma) const;

  std::size_t size() const { return aggregated_.size(); }

private:
  static std::string key(std::string_view lemma, PosTag pos);
  std::unordered_map<std::string, SentimentScores> aggregated_;
};

// Antonym table from a project TSV: lemma \t pos \t antonym \t rank.
// Per (lemma, pos) the list is ordered by rank ascending; rank-1 is the
// one reversal substitutes. Self-antonyms and duplicate ranks are rejected.
class AntonymLexicon {
public:
  AntonymLexicon() = default;

  static AntonymLexicon load(const std::filesystem::path& path);

  // Token-level lookup with the same exact/strip-s policy as the sentiment
  // lexicon. Returns an empty span when there is no entry.
  std::span<const std::string> antonyms(std::string_view token, PosTag pos) const;

  std::size_t size() const { return entries_.size(); }

private:
  static std::string key(std::string_view lemma, PosTag pos);
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// Dictionary tagger driven by the sentiment lexicon: pronouns from a fixed
// closed-class list, any lemma known to the lexicon gets its lexicon POS,
// everything else is OTHER. Holds a reference; keep the lexicon alive.
class LexiconTagger : public Tagger {
public:
  explicit LexiconTagger(const SentimentLexicon& lexicon) : lexicon_(&lexicon) {}
  std::vector<PosTag> tag(const std::vector<std::string>& tokens) const override;

private:
  const SentimentLexicon* lexicon_;
};

bool is_pronoun(std::string_view token);

}  // namespace sarcgen
