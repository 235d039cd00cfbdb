#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sarcgen {

enum class Criterion { Sarcasticness, Creativity, Humor, Grammaticality };

const char* to_string(Criterion c);
std::optional<Criterion> criterion_from_string(std::string_view name);

// One row of the ratings TSV:
//   item_id \t system \t criterion \t r1 \t r2 \t ... (>= 1 integer in [1,5])
struct RatingRecord {
  std::string item_id;
  std::string system;
  Criterion criterion = Criterion::Sarcasticness;
  std::vector<int> scores;
};

std::vector<RatingRecord> load_ratings(const std::filesystem::path& path);

// item id -> rater scores for one (system, criterion) slice.
using ItemScores = std::map<std::string, std::vector<int>>;

ItemScores scores_by_item(std::span<const RatingRecord> records,
                          std::string_view system, Criterion criterion);

// Win/lose/tie counts from comparing per-item mean ratings; percentages
// are over all items, ties included in the denominator.
struct GameResult {
  std::size_t wins = 0;
  std::size_t losses = 0;
  std::size_t ties = 0;
  double win_pct = 0.0;
  double lose_pct = 0.0;

  std::size_t total() const { return wins + losses + ties; }
  double tie_pct() const { return 100.0 - win_pct - lose_pct; }
};

// Throws ItemMismatch when the two sides do not cover the same item ids.
// Mean comparison is exact (integer cross-multiplication), so ties are
// ties even for differing rater counts.
GameResult pairwise_game(const ItemScores& a, const ItemScores& b);

// Product-moment correlation. Throws DegenerateInput for length < 2,
// mismatched lengths, or zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace sarcgen
