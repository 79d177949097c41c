#include "revkano/eval.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "revkano/corpus.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

namespace {

std::vector<std::string> norm_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) out.push_back(std::move(t.norm));
  return out;
}

std::vector<std::string> split_list(std::string_view field) {
  std::vector<std::string> out;
  for (auto& part : split(field, '|')) {
    auto t = trim(part);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

bool is_header(const CsvRow& row, std::string_view first) { return !row.empty() && trim(row[0]) == first; }

std::string percent(const std::optional<double>& v) {
  return v ? format_fixed(*v * 100.0, 2) + "%" : std::string("EMPTY");
}

}  // namespace

GoldList load_gold_text(std::string_view csv) {
  GoldList gold;
  auto rows = parse_csv(csv);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 0 && is_header(rows[r], "name")) continue;
    const auto& row = rows[r];
    GoldFeature f;
    f.name = row.empty() ? std::string() : trim(row[0]);
    if (f.name.empty()) throw ConfigError("gold list line " + std::to_string(r + 1) + ": empty name");
    if (row.size() > 1) f.aliases = split_list(row[1]);
    if (row.size() > 2) f.offered_by = split_list(row[2]);
    for (const auto& e : f.offered_by) {
      if (std::find(gold.entities.begin(), gold.entities.end(), e) == gold.entities.end()) gold.entities.push_back(e);
    }
    gold.features.push_back(std::move(f));
  }
  return gold;
}

GoldList load_gold(const std::filesystem::path& path) { return load_gold_text(read_file(path)); }

std::vector<MatchOverride> load_overrides_text(std::string_view csv) {
  std::vector<MatchOverride> out;
  auto rows = parse_csv(csv);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 0 && is_header(rows[r], "gold_name")) continue;
    if (rows[r].size() != 2) throw ConfigError("overrides line " + std::to_string(r + 1) + ": expected 2 fields");
    out.push_back({trim(rows[r][0]), trim(rows[r][1])});
  }
  return out;
}

std::vector<MatchOverride> load_overrides(const std::filesystem::path& path) {
  return load_overrides_text(read_file(path));
}

MatchResult match(const GoldList& gold, const std::vector<std::vector<std::string>>& extracted,
                  const std::vector<MatchOverride>& overrides) {
  MatchResult result;
  result.extracted_total = extracted.size();
  result.gold_matched.assign(gold.features.size(), false);
  std::vector<bool> used(extracted.size(), false);

  std::map<std::string, std::size_t> gold_by_name;
  for (std::size_t g = 0; g < gold.features.size(); ++g) gold_by_name.emplace(to_lower(gold.features[g].name), g);
  std::map<std::vector<std::string>, std::size_t> term_index;
  for (std::size_t t = 0; t < extracted.size(); ++t) term_index.emplace(extracted[t], t);

  std::set<std::size_t> overridden;
  for (const auto& o : overrides) {
    auto g = gold_by_name.find(to_lower(o.gold_name));
    if (g == gold_by_name.end()) throw ConfigError("override names unknown gold feature '" + o.gold_name + "'");
    overridden.insert(g->second);
    auto t = term_index.find(norm_words(o.extracted_term));
    if (t == term_index.end()) {
      result.warnings.push_back("override term '" + o.extracted_term + "' was not extracted");
      continue;
    }
    result.pairs.push_back({g->second, t->second});
    result.gold_matched[g->second] = true;
    used[t->second] = true;
  }

  for (std::size_t g = 0; g < gold.features.size(); ++g) {
    if (overridden.count(g)) continue;
    std::vector<std::vector<std::string>> keys{norm_words(gold.features[g].name)};
    for (const auto& a : gold.features[g].aliases) keys.push_back(norm_words(a));
    // The tightest containing term wins (an exact match first), earliest on ties.
    std::optional<std::size_t> best;
    for (std::size_t t = 0; t < extracted.size(); ++t) {
      if (used[t]) continue;
      std::set<std::string> words(extracted[t].begin(), extracted[t].end());
      bool hit = std::any_of(keys.begin(), keys.end(), [&](const std::vector<std::string>& key) {
        return !key.empty() &&
               std::all_of(key.begin(), key.end(), [&](const std::string& w) { return words.count(w) > 0; });
      });
      if (hit && (!best || extracted[t].size() < extracted[*best].size())) best = t;
    }
    if (best) {
      result.pairs.push_back({g, *best});
      result.gold_matched[g] = true;
      used[*best] = true;
    }
  }

  for (std::size_t g = 0; g < gold.features.size(); ++g) {
    if (!result.gold_matched[g]) result.unmatched_gold.push_back(g);
  }
  for (std::size_t t = 0; t < extracted.size(); ++t) {
    if (!used[t]) result.unmatched_extracted.push_back(t);
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const MatchPair& a, const MatchPair& b) {
    return a.gold != b.gold ? a.gold < b.gold : a.extracted < b.extracted;
  });
  return result;
}

std::optional<double> recall(const MatchResult& result, const GoldList& gold, const std::optional<std::string>& entity) {
  std::size_t scope = 0;
  std::size_t hit = 0;
  for (std::size_t g = 0; g < gold.features.size(); ++g) {
    const auto& offered = gold.features[g].offered_by;
    if (entity && std::find(offered.begin(), offered.end(), *entity) == offered.end()) continue;
    ++scope;
    if (result.gold_matched[g]) ++hit;
  }
  if (scope == 0) return std::nullopt;
  return static_cast<double>(hit) / static_cast<double>(scope);
}

std::optional<double> precision(std::size_t true_positives, std::size_t false_positives) {
  const std::size_t total = true_positives + false_positives;
  if (total == 0) return std::nullopt;
  return static_cast<double>(true_positives) / static_cast<double>(total);
}

std::string render_eval(const GoldList& gold, const std::vector<std::vector<std::string>>& extracted,
                        const MatchResult& result) {
  std::string out = "| Listed Aspects |";
  std::string rule = "|---|";
  for (const auto& e : gold.entities) {
    out += " " + e + " |";
    rule += ":---:|";
  }
  out += " Extracted Aspects |\n" + rule + "---|\n";
  for (std::size_t g = 0; g < gold.features.size(); ++g) {
    const auto& f = gold.features[g];
    out += "| " + f.name + " |";
    for (const auto& e : gold.entities) {
      bool offered = std::find(f.offered_by.begin(), f.offered_by.end(), e) != f.offered_by.end();
      out += offered ? " Y |" : "  |";
    }
    std::vector<std::string> terms;
    for (const auto& p : result.pairs) {
      if (p.gold == g) terms.push_back(join(extracted[p.extracted], " "));
    }
    out += " " + join(terms, ", ") + " |\n";
  }
  out += "| Recall |";
  for (const auto& e : gold.entities) out += " " + percent(recall(result, gold, e)) + " |";
  out += " " + percent(recall(result, gold)) + " |\n\n";
  const auto tp = result.true_positives();
  const auto fp = result.false_positives();
  out += "Precision = " + std::to_string(tp) + "/(" + std::to_string(tp) + "+" + std::to_string(fp) +
         ") = " + percent(precision(tp, fp)) + "\n";
  for (const auto& w : result.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace revkano
