#include "revkano/apriori.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include <omp.h>

#include "revkano/text_util.hpp"

namespace revkano {

FrequentItemsets::FrequentItemsets(std::size_t total, std::vector<ItemSet> sets)
    : total_(total), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), [](const ItemSet& a, const ItemSet& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
  });
  for (std::size_t i = 0; i < sets_.size(); ++i) index_[sets_[i].items] = i;
}

const ItemSet* FrequentItemsets::find(const std::vector<std::string>& items) const {
  auto it = index_.find(items);
  return it == index_.end() ? nullptr : &sets_[it->second];
}

namespace kernels {

namespace {

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto id : s) {
      h ^= id + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// n choose k, saturating.
std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 40)) return static_cast<std::size_t>(1ull << 40);
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

EncodedTransactions encode(const std::vector<Transaction>& transactions) {
  EncodedTransactions db;
  std::set<std::string> vocab;
  for (const auto& t : transactions) vocab.insert(t.items.begin(), t.items.end());
  db.vocabulary.assign(vocab.begin(), vocab.end());
  std::unordered_map<std::string, ItemId> ids;
  for (std::size_t i = 0; i < db.vocabulary.size(); ++i) ids[db.vocabulary[i]] = static_cast<ItemId>(i);
  db.rows.reserve(transactions.size());
  for (const auto& t : transactions) {
    Itemset row;
    for (const auto& item : t.items) row.push_back(ids[item]);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    db.rows.push_back(std::move(row));
  }
  return db;
}

std::vector<std::size_t> count_support_serial(const EncodedTransactions& db, const std::vector<Itemset>& candidates) {
  std::vector<std::size_t> counts(candidates.size(), 0);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (const auto& row : db.rows) {
      if (std::includes(row.begin(), row.end(), candidates[c].begin(), candidates[c].end())) ++counts[c];
    }
  }
  return counts;
}

std::vector<std::size_t> count_support_omp(const EncodedTransactions& db, const std::vector<Itemset>& candidates,
                                           int jobs) {
  const std::size_t m = candidates.size();
  std::vector<std::size_t> counts(m, 0);
  if (m == 0) return counts;
  const std::size_t k = candidates.front().size();

  std::unordered_map<Itemset, std::size_t, ItemsetHash> index;
  index.reserve(m * 2);
  for (std::size_t c = 0; c < m; ++c) index.emplace(candidates[c], c);

  const long rows = static_cast<long>(db.rows.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::size_t> local(m, 0);
    Itemset subset(k);
    std::vector<std::size_t> pick(k);
#pragma omp for schedule(dynamic, 256) nowait
    for (long r = 0; r < rows; ++r) {
      const auto& row = db.rows[r];
      const std::size_t n = row.size();
      if (n < k) continue;
      if (choose(n, k) <= m) {
        // Enumerate k-combinations of the row in lexicographic order.
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
          for (std::size_t i = 0; i < k; ++i) subset[i] = row[pick[i]];
          if (auto it = index.find(subset); it != index.end()) ++local[it->second];
          std::size_t i = k;
          while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
      } else {
        for (std::size_t c = 0; c < m; ++c) {
          if (std::includes(row.begin(), row.end(), candidates[c].begin(), candidates[c].end())) ++local[c];
        }
      }
    }
#pragma omp critical
    for (std::size_t c = 0; c < m; ++c) counts[c] += local[c];
  }
  return counts;
}

std::vector<Itemset> generate_candidates(const std::vector<Itemset>& frequent) {
  std::vector<Itemset> out;
  if (frequent.empty()) return out;
  const std::size_t k = frequent.front().size();
  std::set<Itemset> known(frequent.begin(), frequent.end());
  for (std::size_t a = 0; a < frequent.size(); ++a) {
    for (std::size_t b = a + 1; b < frequent.size(); ++b) {
      const auto& x = frequent[a];
      const auto& y = frequent[b];
      if (!std::equal(x.begin(), x.end() - 1, y.begin())) break;  // sorted: prefix block ended
      Itemset cand = x;
      cand.push_back(y.back());
      // Dropping either of the last two items gives x or y; check the rest.
      bool all_frequent = true;
      Itemset sub(k);
      for (std::size_t drop = 0; drop + 1 < k && all_frequent; ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (i != drop) sub[w++] = cand[i];
        }
        all_frequent = known.count(sub) > 0;
      }
      if (all_frequent) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace kernels

FrequentItemsets mine_frequent(const std::vector<Transaction>& transactions, const MiningOptions& opts) {
  if (!(opts.min_support > 0.0 && opts.min_support <= 1.0)) {
    throw ConfigError("min_support must be in (0, 1], got " + std::to_string(opts.min_support));
  }
  const std::size_t total = transactions.size();
  if (total == 0) return FrequentItemsets(0, {});

  auto db = kernels::encode(transactions);
  auto is_frequent = [&](std::size_t count) {
    return static_cast<double>(count) / static_cast<double>(total) >= opts.min_support;
  };

  std::vector<ItemSet> result;
  auto emit = [&](const kernels::Itemset& ids, std::size_t count) {
    ItemSet s;
    for (auto id : ids) s.items.push_back(db.vocabulary[id]);
    s.support_count = count;
    s.support = static_cast<double>(count) / static_cast<double>(total);
    result.push_back(std::move(s));
  };

  // Level 1 by direct counting.
  std::vector<std::size_t> item_counts(db.vocabulary.size(), 0);
  for (const auto& row : db.rows) {
    for (auto id : row) ++item_counts[id];
  }
  std::vector<kernels::Itemset> level;
  for (std::size_t id = 0; id < item_counts.size(); ++id) {
    if (is_frequent(item_counts[id])) {
      level.push_back({static_cast<kernels::ItemId>(id)});
      emit(level.back(), item_counts[id]);
    }
  }

  for (std::size_t k = 2; k <= opts.max_itemset_size && level.size() >= 2; ++k) {
    auto candidates = kernels::generate_candidates(level);
    if (candidates.empty()) break;
    auto counts = opts.jobs == 1 ? kernels::count_support_serial(db, candidates)
                                 : kernels::count_support_omp(db, candidates, opts.jobs);
    std::vector<kernels::Itemset> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (is_frequent(counts[c])) {
        emit(candidates[c], counts[c]);
        next.push_back(std::move(candidates[c]));
      }
    }
    level = std::move(next);
  }
  return FrequentItemsets(total, std::move(result));
}

std::vector<Rule> generate_rules(const FrequentItemsets& frequent, double min_confidence) {
  std::vector<Rule> rules;
  for (const auto& set : frequent.sets()) {
    const std::size_t k = set.items.size();
    if (k < 2 || k > 30) continue;
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Rule r;
      for (std::size_t i = 0; i < k; ++i) {
        ((mask >> i) & 1u ? r.antecedent : r.consequent).push_back(set.items[i]);
      }
      const ItemSet* ante = frequent.find(r.antecedent);
      if (ante == nullptr || ante->support_count == 0) continue;  // cannot happen under downward closure
      r.support_count = set.support_count;
      r.antecedent_count = ante->support_count;
      r.support = set.support;
      r.confidence = static_cast<double>(set.support_count) / static_cast<double>(ante->support_count);
      if (r.confidence >= min_confidence) rules.push_back(std::move(r));
    }
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  return rules;
}

}  // namespace revkano
