#include "sarcgen/evaluation.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "sarcgen/errors.hpp"
#include "sarcgen/text.hpp"

namespace sarcgen {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Sarcasticness: return "sarcasticness";
    case Criterion::Creativity: return "creativity";
    case Criterion::Humor: return "humor";
    case Criterion::Grammaticality: return "grammaticality";
  }
  return "sarcasticness";
}

std::optional<Criterion> criterion_from_string(std::string_view name) {
  const std::string lowered = to_lower(name);
  if (lowered == "sarcasticness") return Criterion::Sarcasticness;
  if (lowered == "creativity") return Criterion::Creativity;
  if (lowered == "humor") return Criterion::Humor;
  if (lowered == "grammaticality") return Criterion::Grammaticality;
  return std::nullopt;
}

std::vector<RatingRecord> load_ratings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open ratings file: " + path.string());
  }
  std::vector<RatingRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() < 4) {
      throw LexiconParseError("ratings: line " + std::to_string(line_no) +
                              ": expected at least 4 tab-separated fields");
    }
    RatingRecord rec;
    rec.item_id = fields[0];
    rec.system = fields[1];
    auto criterion = criterion_from_string(fields[2]);
    if (!criterion) {
      throw LexiconParseError("ratings: line " + std::to_string(line_no) +
                              ": unknown criterion '" + fields[2] + "'");
    }
    rec.criterion = *criterion;
    for (std::size_t i = 3; i < fields.size(); ++i) {
      int score = 0;
      auto [ptr, ec] = std::from_chars(fields[i].data(),
                                       fields[i].data() + fields[i].size(), score);
      if (ec != std::errc() || ptr != fields[i].data() + fields[i].size() ||
          score < 1 || score > 5) {
        throw LexiconParseError("ratings: line " + std::to_string(line_no) +
                                ": bad score '" + fields[i] + "'");
      }
      rec.scores.push_back(score);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

ItemScores scores_by_item(std::span<const RatingRecord> records,
                          std::string_view system, Criterion criterion) {
  ItemScores out;
  for (const auto& rec : records) {
    if (rec.criterion != criterion || rec.system != system) continue;
    auto& slot = out[rec.item_id];
    slot.insert(slot.end(), rec.scores.begin(), rec.scores.end());
  }
  return out;
}

GameResult pairwise_game(const ItemScores& a, const ItemScores& b) {
  if (a.size() != b.size()) {
    throw ItemMismatch("pairwise_game: sides cover different item counts (" +
                       std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  GameResult result;
  for (const auto& [item, a_scores] : a) {
    auto it = b.find(item);
    if (it == b.end()) {
      throw ItemMismatch("pairwise_game: item '" + item + "' missing on one side");
    }
    const auto& b_scores = it->second;
    if (a_scores.empty() || b_scores.empty()) {
      throw ItemMismatch("pairwise_game: item '" + item + "' has no scores");
    }
    long long a_sum = 0, b_sum = 0;
    for (int s : a_scores) a_sum += s;
    for (int s : b_scores) b_sum += s;
    // mean(a) vs mean(b) compared exactly: a_sum/an <=> b_sum/bn.
    const long long lhs = a_sum * static_cast<long long>(b_scores.size());
    const long long rhs = b_sum * static_cast<long long>(a_scores.size());
    if (lhs > rhs) {
      ++result.wins;
    } else if (lhs < rhs) {
      ++result.losses;
    } else {
      ++result.ties;
    }
  }
  const double total = static_cast<double>(result.total());
  if (total > 0) {
    result.win_pct = 100.0 * static_cast<double>(result.wins) / total;
    result.lose_pct = 100.0 * static_cast<double>(result.losses) / total;
  }
  return result;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw DegenerateInput("pearson: length mismatch");
  }
  if (xs.size() < 2) {
    throw DegenerateInput("pearson: need at least 2 points");
  }
  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateInput("pearson: zero variance");
  }
  // Cauchy-Schwarz equality means perfect correlation; returning the sign
  // directly keeps the trivial cases exact and clamps rounding overshoot.
  if (sxy * sxy >= sxx * syy) {
    return sxy > 0.0 ? 1.0 : -1.0;
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace sarcgen
