#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sarcgen/commonsense.hpp"
#include "sarcgen/text.hpp"

namespace sarcgen {

struct CorpusSentence {
  std::string text;
  std::vector<std::string> tokens;
};

// Read-only sentence store with an inverted index over lowercase tokens.
// Built from a newline-delimited UTF-8 corpus (blank lines skipped,
// duplicates kept with distinct ids).
class CorpusIndex {
public:
  CorpusIndex() = default;

  static CorpusIndex build(const std::filesystem::path& path);
  static CorpusIndex build_from_lines(std::span<const std::string> lines);

  std::size_t size() const { return sentences_.size(); }
  const CorpusSentence& sentence(std::uint32_t id) const { return sentences_[id]; }

  // Posting list (ascending sentence ids) for a lowercase token, or nullptr.
  const std::vector<std::uint32_t>* postings(const std::string& lower_token) const;

  // FNV-1a over the sentences the index was built from.
  std::uint64_t content_hash() const { return content_hash_; }

  // Binary cache: magic, format version, content hash, sentence texts.
  // load_cache returns nullopt on a missing file, wrong magic or stale
  // version; callers compare content_hash to detect corpus changes.
  void save_cache(const std::filesystem::path& path) const;
  static std::optional<CorpusIndex> load_cache(const std::filesystem::path& path);

private:
  void add_sentence(std::string text);
  void finalize();

  std::vector<CorpusSentence> sentences_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> postings_;
  std::uint64_t content_hash_ = 0;
};

enum class ConceptPosition { Begin, End };

const char* to_string(ConceptPosition p);

struct RetrievedContext {
  std::string sentence;  // substituted text when substituted is true
  std::uint32_t source_id = 0;
  ConceptPosition position = ConceptPosition::Begin;
  bool substituted = false;
  std::optional<std::string> substituted_noun;
};

// Primary pass: sentences carrying the concept's token sequence at the
// beginning or the end (one leading/trailing punctuation token tolerated,
// case-insensitive) with token count < 2 * input_len. Fallback pass (only
// when the primary finds nothing): the same constraints per noun of the
// phrase, with the matched noun replaced by the whole phrase. Results are
// ordered by sentence id and truncated to max_out.
std::vector<RetrievedContext> retrieve_contexts(const CorpusIndex& index,
                                                const ConceptPhrase& phrase,
                                                std::size_t input_len,
                                                std::size_t max_out = 20);

}  // namespace sarcgen
