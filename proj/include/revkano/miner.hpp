#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revkano/apriori.hpp"
#include "revkano/corpus.hpp"
#include "revkano/tagger.hpp"

namespace revkano {

struct AspectTerm {
  std::vector<std::string> words;  // ordered norms
  std::size_t occurrence_count = 0;  // sentences containing the term

  std::string label() const;
  bool operator==(const AspectTerm&) const = default;
};

struct AspectCategory {
  std::string category_id;
  std::string label;
  std::vector<std::vector<std::string>> members;

  bool operator==(const AspectCategory&) const = default;
};

// One transaction per phrase; DET and PREP terms excluded; empty sets dropped.
std::vector<Transaction> build_transactions(const std::vector<NounPhrase>& phrases);

/// Inverted index norm -> sorted sentence ids, for sentence-occurrence counts.
class SentenceIndex {
 public:
  explicit SentenceIndex(const std::vector<Sentence>& sentences);

  std::size_t count(std::string_view word) const;
  // Sentences containing every word (in any position or order).
  std::size_t count_all(std::span<const std::string> words) const;
  std::vector<std::size_t> sentences_with_all(std::span<const std::string> words) const;

 private:
  const std::vector<std::size_t>* postings(std::string_view word) const;
  std::unordered_map<std::string, std::vector<std::size_t>> postings_;
};

// Positions of each match of `words` in order, at most `max_gap` tokens between
// consecutive words. Matches are leftmost-first and non-overlapping.
std::vector<std::vector<int>> find_occurrences(std::span<const Token> tokens, std::span<const std::string> words,
                                               int max_gap);

// Single-word aspects: w is kept iff count(w) - max_s count(s) > threshold over
// the rule itemsets s containing w (count(w) > threshold when there are none).
// `extra_candidates` admits words that do not appear in any rule.
std::vector<AspectTerm> prune_singletons(const std::vector<Rule>& rules, const SentenceIndex& index,
                                         std::size_t threshold,
                                         const std::vector<std::string>& extra_candidates = {});

struct MultiwordOptions {
  int max_gap = 2;
  std::size_t min_sentences = 2;
  std::size_t max_candidate_size = 4;
};

// Unique antecedent ∪ consequent sets of size >= 2 (and <= max size), sorted.
std::vector<std::vector<std::string>> multiword_candidates(const std::vector<Rule>& rules, std::size_t max_size = 4);

// Word orders are taken from the sentences. A match that sits inside one
// coalesced phrase and crosses its preposition keeps the phrase's words in
// between ("end to end encryption").
std::vector<AspectTerm> validate_multiword(const std::vector<std::vector<std::string>>& candidates,
                                           const std::vector<Sentence>& sentences,
                                           const std::vector<NounPhrase>& phrases, const MultiwordOptions& opts = {});

struct MinerConfig {
  double min_support = 0.0004;
  double min_confidence = 0.6;
  std::size_t prune_threshold = 3;
  int max_gap = 2;
  std::size_t min_sentences = 2;
  bool include_frequent_singletons = false;
  int jobs = 1;
};

struct MiningResult {
  std::vector<Transaction> transactions;
  FrequentItemsets frequent;
  std::vector<Rule> rules;
  std::vector<AspectTerm> terms;  // singles and multi-word, sorted by words
};

MiningResult mine_aspects(const std::vector<Sentence>& sentences, const std::vector<NounPhrase>& phrases,
                          const MinerConfig& config);

struct CategoryLoad {
  std::vector<AspectCategory> categories;
  std::vector<AspectTerm> uncategorized;
  std::vector<std::string> warnings;
};

// Throws ConfigError for malformed files and for a member listed twice.
CategoryLoad load_categories(const std::filesystem::path& path, const std::vector<AspectTerm>& mined);
CategoryLoad load_categories_text(std::string_view json_text, const std::vector<AspectTerm>& mined);

// Appends one singleton category per uncategorized term.
std::vector<AspectCategory> with_singleton_categories(const CategoryLoad& load);

std::string categories_to_json(const std::vector<AspectCategory>& categories);
std::string transactions_to_jsonl(const std::vector<Transaction>& transactions);
std::string itemsets_to_jsonl(const FrequentItemsets& frequent);
std::string rules_to_jsonl(const std::vector<Rule>& rules);
std::string aspect_terms_to_jsonl(const std::vector<AspectTerm>& terms);
std::vector<AspectTerm> aspect_terms_from_jsonl(std::string_view text);

}  // namespace revkano
