#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "revkano/corpus.hpp"
#include "revkano/miner.hpp"

namespace revkano {

/// Positive/negative word lists; disjoint after loading.
struct OpinionLexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
  std::vector<std::string> conflicts;  // words found in both lists, dropped

  // +1, -1, or 0 for words in neither list.
  int polarity(std::string_view norm) const;
};

// One word per line, ';' comments. Throws ConfigError if a file is unreadable.
OpinionLexicon load_lexicon(const std::filesystem::path& positive_path, const std::filesystem::path& negative_path);
OpinionLexicon load_lexicon_text(std::string_view positive, std::string_view negative);
OpinionLexicon load_lexicon_dir(const std::filesystem::path& dir);

struct SentimentMatch {
  std::string word;
  int polarity = 0;
  int pos = 0;
};

std::vector<SentimentMatch> find_sentiment_words(std::span<const Token> tokens, const OpinionLexicon& lexicon);

/// Separate non-negative magnitudes, never a signed sum.
struct AspectScore {
  double positive = 0.0;
  double negative = 0.0;

  AspectScore& operator+=(const AspectScore& o) {
    positive += o.positive;
    negative += o.negative;
    return *this;
  }
  friend AspectScore operator+(AspectScore a, const AspectScore& b) { return a += b; }
  bool operator==(const AspectScore&) const = default;
};

// Each sentiment word outside every occurrence span of the aspect adds
// 1/dist to its polarity, dist = min token distance to any matched aspect
// token (floor 1).
AspectScore score_sentence(std::span<const Token> tokens, std::span<const std::string> aspect,
                           const OpinionLexicon& lexicon, int max_gap = 2);

/// Count of 1/d contributions per integer distance d. Integer merges are
/// exact, so partial results combine in any order with identical output.
class DistanceHistogram {
 public:
  void add(std::uint32_t distance, std::uint64_t n = 1);
  void merge(const DistanceHistogram& other);
  // sum_d count[d] / d, ascending d
  double evaluate() const;
  std::uint64_t total() const;
  bool operator==(const DistanceHistogram&) const = default;

 private:
  std::vector<std::uint64_t> counts_;  // index = distance
};

struct PolarityHistogram {
  DistanceHistogram positive;
  DistanceHistogram negative;

  void merge(const PolarityHistogram& o) {
    positive.merge(o.positive);
    negative.merge(o.negative);
  }
  AspectScore score() const { return {positive.evaluate(), negative.evaluate()}; }
  bool operator==(const PolarityHistogram&) const = default;
};

struct ScoreOptions {
  int max_gap = 2;
  int jobs = 1;
};

struct ScoreTable {
  std::vector<std::string> entities;  // sorted
  std::vector<AspectTerm> terms;
  std::vector<AspectCategory> categories;
  std::vector<AspectScore> term_scores;
  std::vector<AspectScore> category_scores;
  std::vector<std::vector<AspectScore>> entity_term_scores;      // [entity][term]
  std::vector<std::vector<AspectScore>> entity_category_scores;  // [entity][category]

  std::optional<std::size_t> entity_index(std::string_view entity) const;
};

// Category and entity scores come from merged histograms, so they equal the
// sum of member/partition scores up to rounding.
ScoreTable score_corpus(const std::vector<Sentence>& sentences, const std::vector<AspectTerm>& terms,
                        const std::vector<AspectCategory>& categories, const OpinionLexicon& lexicon,
                        const ScoreOptions& opts = {});

// (positive / reviews, negative / reviews); nullopt when reviews == 0.
std::optional<AspectScore> normalize_per_entity(const AspectScore& score, std::size_t review_count);

std::string scores_to_jsonl(const ScoreTable& table);

namespace kernels {

struct ScoringInput {
  const std::vector<Sentence>* sentences = nullptr;
  std::vector<std::uint32_t> sentence_entity;        // entity index per sentence
  std::size_t entity_count = 0;
  std::vector<std::vector<std::string>> aspects;     // scored word sequences
  const OpinionLexicon* lexicon = nullptr;
  int max_gap = 2;
};

// Flat [aspect * entity_count + entity] grid.
using HistogramGrid = std::vector<PolarityHistogram>;

HistogramGrid score_sentences_serial(const ScoringInput& in);
HistogramGrid score_sentences_omp(const ScoringInput& in, int jobs);

}  // namespace kernels

}  // namespace revkano
