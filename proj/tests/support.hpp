#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "sarcgen/pipeline.hpp"

namespace sarcgen::test {

inline std::filesystem::path data_dir() { return SARCGEN_DATA_DIR; }

inline std::filesystem::path data_file(const std::string& name) {
  return data_dir() / name;
}

// Shared read-only resources loaded from the shipped data files.
inline const Resources& default_resources() {
  static const Resources resources = [] {
    ResourcePaths paths;
    paths.sentiment_lexicon = data_file("sentiment_lexicon.tsv");
    paths.antonym_lexicon = data_file("antonyms.tsv");
    paths.stopwords = data_file("stopwords.txt");
    paths.fillers = data_file("fillers.txt");
    paths.corpus = data_file("corpus.txt");
    return Resources::load(paths);
  }();
  return resources;
}

// Unique scratch directory, removed on destruction.
class TempDir {
public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("sarcgen_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto file = path_ / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }

private:
  std::filesystem::path path_;
};

}  // namespace sarcgen::test
