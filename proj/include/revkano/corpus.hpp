#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revkano {

struct Review {
  std::string entity_id;
  std::string review_id;
  std::string text;
  std::optional<int> rating;
  // Opinion holder/time metadata; carried through, never interpreted.
  std::optional<std::string> timestamp;
};

struct Token {
  std::string surface;
  std::string norm;
  int pos = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string entity_id;
  std::string review_id;
  int index = 0;  // position within the review
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Reject {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct TokenizeOptions {
  // Reduce runs of >= 3 identical letters to 2 in norm forms.
  bool collapse_elongation = false;
};

/// Reviews grouped by entity. Immutable once ingested.
class Corpus {
 public:
  // Returns false when review_id already exists for that entity.
  bool add(Review review);

  const std::vector<Review>& reviews() const { return reviews_; }
  const std::map<std::string, std::size_t>& review_counts() const { return counts_; }
  std::size_t entity_count() const { return counts_.size(); }
  bool empty() const { return reviews_.empty(); }

 private:
  std::vector<Review> reviews_;
  std::map<std::string, std::size_t> counts_;
  std::map<std::string, std::vector<std::string>> ids_;
};

struct IngestResult {
  Corpus corpus;
  std::vector<Reject> rejects;
};

IngestResult ingest_reviews(const std::filesystem::path& path);
IngestResult ingest_reviews_text(std::string_view jsonl);

std::vector<std::string> segment(std::string_view text);
std::vector<Token> tokenize(std::string_view sentence, const TokenizeOptions& opts = {});
std::string collapse_elongation(std::string_view word);

// Segments and tokenizes every review, in input order. Sentences with no
// surviving tokens are dropped; indices stay contiguous per review.
std::vector<Sentence> build_sentences(const Corpus& corpus, const TokenizeOptions& opts = {});

std::string rejects_csv(const std::vector<Reject>& rejects);

// Persisted intermediates: sentences as JSONL, review counts as JSON.
std::string sentences_to_jsonl(const std::vector<Sentence>& sentences);
std::vector<Sentence> sentences_from_jsonl(std::string_view text);
std::string review_counts_to_json(const std::map<std::string, std::size_t>& counts);
std::map<std::string, std::size_t> review_counts_from_json(std::string_view text);

}  // namespace revkano
