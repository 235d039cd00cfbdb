#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sarcgen {

// Coarse POS tag set. Fine-grained tags buy nothing for the rules here.
enum class PosTag { Noun, Verb, Adj, Adv, Pron, Other };

const char* to_string(PosTag tag);

// Maps the lexicon file letters: a -> Adj, n -> Noun, v -> Verb, r -> Adv.
// Returns false for anything else.
bool pos_from_letter(char letter, PosTag& out);
char pos_letter(PosTag tag);

// Tagging contract. Implementations must return exactly one tag per token.
class Tagger {
public:
  virtual ~Tagger() = default;
  virtual std::vector<PosTag> tag(const std::vector<std::string>& tokens) const = 0;
};

// A tokenized, tagged sentence. tokens.size() == tags.size() always.
struct Utterance {
  std::string surface;
  std::vector<std::string> tokens;
  std::vector<PosTag> tags;
};

// Case-insensitive stopword membership. File format: UTF-8, one lowercase
// word per line, '#' starts a comment line.
class StopwordSet {
public:
  StopwordSet() = default;
  explicit StopwordSet(std::initializer_list<std::string> words);
  static StopwordSet load(const std::filesystem::path& path);

  void insert(std::string_view word);
  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

private:
  std::unordered_set<std::string> words_;
};

// Splits on whitespace, then peels boundary punctuation characters into
// single-character tokens. Interior apostrophes stay put, so contractions
// like "isn't" survive as one token.
std::vector<std::string> split_tokens(std::string_view text);

// split_tokens + tags from the given tagger. Throws EmptyInput when the
// text is blank after trimming.
Utterance tokenize(std::string_view text, const Tagger& tagger);

// Joins tokens with single spaces, no space before closing punctuation,
// capitalizes the first character and guarantees terminal punctuation.
// Throws EmptyInput on an empty list.
std::string detokenize(std::span<const std::string> tokens);

// Tokens tagged NOUN/VERB/ADJ/ADV that are not stopwords, lowercased, in
// original order, first occurrence kept.
std::vector<std::string> content_terms(const Utterance& u, const StopwordSet& stop);

// True for tokens whose first character is not alphanumeric.
bool is_punct_token(std::string_view token);

std::string to_lower(std::string_view s);

// Lowercase plus one trailing 's' stripped (length >= 3). The only
// lemmatization the toolkit does; used for noun matching and overlap tests.
std::string noun_lemma(std::string_view token);

}  // namespace sarcgen
