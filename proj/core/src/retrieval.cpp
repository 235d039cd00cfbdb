#include "sarcgen/retrieval.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "sarcgen/errors.hpp"

namespace sarcgen {

namespace {

constexpr char kCacheMagic[4] = {'S', 'G', 'I', 'X'};
constexpr std::uint32_t kCacheVersion = 1;

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= s.size() ||
          (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
        return false;
      }
    }
    i += extra + 1;
  }
  return true;
}

// Matches the concept tokens against the sentence starting at `at`.
bool tokens_match_at(const std::vector<std::string>& sentence,
                     const std::vector<std::string>& needle, std::size_t at) {
  if (at + needle.size() > sentence.size()) return false;
  for (std::size_t i = 0; i < needle.size(); ++i) {
    if (to_lower(sentence[at + i]) != to_lower(needle[i])) return false;
  }
  return true;
}

// BEGIN: at index 0, or 1 when token 0 is punctuation.
// END: ending at the last token, or last-1 when the last is punctuation.
std::optional<ConceptPosition> match_position(const std::vector<std::string>& sentence,
                                              const std::vector<std::string>& needle,
                                              std::size_t* match_at) {
  if (needle.empty() || sentence.empty()) return std::nullopt;
  std::size_t begin_at = 0;
  if (is_punct_token(sentence[0]) && sentence.size() > 1) begin_at = 1;
  if (tokens_match_at(sentence, needle, begin_at)) {
    *match_at = begin_at;
    return ConceptPosition::Begin;
  }
  std::size_t last = sentence.size();
  if (is_punct_token(sentence[last - 1]) && last > 1) --last;
  if (last >= needle.size()) {
    const std::size_t end_at = last - needle.size();
    if (tokens_match_at(sentence, needle, end_at)) {
      *match_at = end_at;
      return ConceptPosition::End;
    }
  }
  return std::nullopt;
}

void write_u32(std::ofstream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_u64(std::ofstream& out, std::uint64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
bool read_u32(std::ifstream& in, std::uint32_t& v) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof(v)));
}
bool read_u64(std::ifstream& in, std::uint64_t& v) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof(v)));
}

}  // namespace

const char* to_string(ConceptPosition p) {
  return p == ConceptPosition::Begin ? "BEGIN" : "END";
}

void CorpusIndex::add_sentence(std::string text) {
  CorpusSentence s;
  s.tokens = split_tokens(text);
  s.text = std::move(text);
  sentences_.push_back(std::move(s));
}

void CorpusIndex::finalize() {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t id = 0; id < sentences_.size(); ++id) {
    h = fnv1a(sentences_[id].text, h);
    h = fnv1a("\n", h);
    for (const auto& tok : sentences_[id].tokens) {
      auto& list = postings_[to_lower(tok)];
      if (list.empty() || list.back() != id) list.push_back(id);
    }
  }
  content_hash_ = h;
}

CorpusIndex CorpusIndex::build(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open corpus file: " + path.string());
  }
  CorpusIndex index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!valid_utf8(line)) {
      throw CorpusParseError("corpus: line " + std::to_string(line_no) +
                             ": invalid UTF-8");
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    index.add_sentence(line);
  }
  index.finalize();
  return index;
}

CorpusIndex CorpusIndex::build_from_lines(std::span<const std::string> lines) {
  CorpusIndex index;
  for (const auto& line : lines) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    index.add_sentence(line);
  }
  index.finalize();
  return index;
}

const std::vector<std::uint32_t>* CorpusIndex::postings(
    const std::string& lower_token) const {
  auto it = postings_.find(lower_token);
  return it == postings_.end() ? nullptr : &it->second;
}

void CorpusIndex::save_cache(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot write index cache: " + path.string());
  }
  out.write(kCacheMagic, sizeof(kCacheMagic));
  write_u32(out, kCacheVersion);
  write_u64(out, content_hash_);
  write_u32(out, static_cast<std::uint32_t>(sentences_.size()));
  for (const auto& s : sentences_) {
    write_u32(out, static_cast<std::uint32_t>(s.text.size()));
    out.write(s.text.data(), static_cast<std::streamsize>(s.text.size()));
  }
  if (!out) {
    throw ConfigError("short write on index cache: " + path.string());
  }
}

std::optional<CorpusIndex> CorpusIndex::load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kCacheMagic, 4) != 0) {
    return std::nullopt;
  }
  std::uint32_t version = 0;
  if (!read_u32(in, version) || version != kCacheVersion) return std::nullopt;
  std::uint64_t hash = 0;
  std::uint32_t count = 0;
  if (!read_u64(in, hash) || !read_u32(in, count)) return std::nullopt;
  CorpusIndex index;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t len = 0;
    if (!read_u32(in, len)) return std::nullopt;
    std::string text(len, '\0');
    if (!in.read(text.data(), len)) return std::nullopt;
    index.add_sentence(std::move(text));
  }
  index.finalize();
  if (index.content_hash_ != hash) return std::nullopt;
  return index;
}

std::vector<RetrievedContext> retrieve_contexts(const CorpusIndex& index,
                                                const ConceptPhrase& phrase,
                                                std::size_t input_len,
                                                std::size_t max_out) {
  const auto needle = split_tokens(phrase.text);
  if (needle.empty() || input_len == 0) return {};
  const std::size_t max_tokens = 2 * input_len;  // strict: count < max_tokens

  std::vector<RetrievedContext> results;

  // Primary pass: the full phrase, driven by the first token's postings.
  if (const auto* ids = index.postings(to_lower(needle.front()))) {
    for (std::uint32_t id : *ids) {
      const auto& sent = index.sentence(id);
      if (sent.tokens.size() >= max_tokens) continue;
      std::size_t at = 0;
      if (auto pos = match_position(sent.tokens, needle, &at)) {
        RetrievedContext ctx;
        ctx.sentence = sent.text;
        ctx.source_id = id;
        ctx.position = *pos;
        results.push_back(std::move(ctx));
      }
    }
  }

  // Fallback pass: nouns of the phrase, substituted back in.
  if (results.empty()) {
    std::vector<std::pair<std::uint32_t, RetrievedContext>> fallback;
    std::unordered_map<std::uint32_t, bool> taken;
    for (const auto& noun : phrase.nouns) {
      const std::string lemma = noun_lemma(noun);
      for (const std::string& variant : {lemma, lemma + "s"}) {
        const auto* ids = index.postings(variant);
        if (!ids) continue;
        for (std::uint32_t id : *ids) {
          if (taken.count(id) > 0) continue;
          const auto& sent = index.sentence(id);
          if (sent.tokens.size() >= max_tokens) continue;
          const std::vector<std::string> noun_needle = {variant};
          std::size_t at = 0;
          auto pos = match_position(sent.tokens, noun_needle, &at);
          if (!pos) continue;
          taken[id] = true;

          auto tokens = sent.tokens;
          tokens[at] = phrase.text;
          RetrievedContext ctx;
          ctx.sentence = detokenize(tokens);
          ctx.source_id = id;
          ctx.position = *pos;
          ctx.substituted = true;
          ctx.substituted_noun = noun;
          fallback.emplace_back(id, std::move(ctx));
        }
      }
    }
    std::sort(fallback.begin(), fallback.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [id, ctx] : fallback) results.push_back(std::move(ctx));
  }

  if (results.size() > max_out) results.resize(max_out);
  return results;
}

}  // namespace sarcgen
