#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace revkano {

/// Unique terms of one noun phrase, sorted.
struct Transaction {
  std::vector<std::string> items;

  bool operator==(const Transaction&) const = default;
};

struct ItemSet {
  std::vector<std::string> items;  // sorted
  std::size_t support_count = 0;
  double support = 0.0;

  bool operator==(const ItemSet&) const = default;
};

struct Rule {
  std::vector<std::string> antecedent;  // sorted
  std::vector<std::string> consequent;  // sorted
  std::size_t support_count = 0;        // transactions containing antecedent ∪ consequent
  std::size_t antecedent_count = 0;
  double support = 0.0;
  double confidence = 0.0;

  bool operator==(const Rule&) const = default;
};

class FrequentItemsets {
 public:
  FrequentItemsets() = default;
  FrequentItemsets(std::size_t total, std::vector<ItemSet> sets);

  std::size_t total_transactions() const { return total_; }
  // Ordered by size, then lexicographically.
  const std::vector<ItemSet>& sets() const { return sets_; }
  const ItemSet* find(const std::vector<std::string>& items) const;

 private:
  std::size_t total_ = 0;
  std::vector<ItemSet> sets_;
  std::map<std::vector<std::string>, std::size_t> index_;
};

struct MiningOptions {
  double min_support = 0.0004;
  // Largest itemset considered (the R arules default is 10).
  std::size_t max_itemset_size = 10;
  int jobs = 1;
};

// Frequent iff support_count / total >= min_support. Throws ConfigError for
// min_support outside (0, 1].
FrequentItemsets mine_frequent(const std::vector<Transaction>& transactions, const MiningOptions& opts);
inline FrequentItemsets mine_frequent(const std::vector<Transaction>& transactions, double min_support) {
  MiningOptions opts;
  opts.min_support = min_support;
  return mine_frequent(transactions, opts);
}

// All A -> C with A ∪ C frequent, A ∩ C = ∅, both non-empty and
// confidence = count(A ∪ C) / count(A) >= min_confidence. Sorted by
// (antecedent, consequent).
std::vector<Rule> generate_rules(const FrequentItemsets& frequent, double min_confidence);

namespace kernels {

using ItemId = std::uint32_t;
using Itemset = std::vector<ItemId>;

struct EncodedTransactions {
  std::vector<std::string> vocabulary;  // sorted; id = index
  std::vector<Itemset> rows;            // sorted ids
};

EncodedTransactions encode(const std::vector<Transaction>& transactions);

// Reference: every candidate tested against every row.
std::vector<std::size_t> count_support_serial(const EncodedTransactions& db, const std::vector<Itemset>& candidates);

// Rows split across OpenMP threads; each row enumerates its k-subsets against
// a candidate hash (or scans candidates when that is cheaper), thread-local
// counts merged at the end. All candidates must share the same size.
std::vector<std::size_t> count_support_omp(const EncodedTransactions& db, const std::vector<Itemset>& candidates,
                                           int jobs);

// Apriori join + prune over sorted, same-size frequent sets.
std::vector<Itemset> generate_candidates(const std::vector<Itemset>& frequent);

}  // namespace kernels

}  // namespace revkano
