#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revkano {

struct GoldFeature {
  std::string name;
  std::vector<std::string> aliases;
  std::vector<std::string> offered_by;  // entity ids
};

struct GoldList {
  std::vector<GoldFeature> features;  // file order
  std::vector<std::string> entities;  // first-seen order
};

// gold.csv: name,aliases(|-separated),entities(|-separated), with header.
GoldList load_gold_text(std::string_view csv);
GoldList load_gold(const std::filesystem::path& path);

struct MatchOverride {
  std::string gold_name;
  std::string extracted_term;  // space-separated words
};

// overrides.csv: gold_name,extracted_term, with header.
std::vector<MatchOverride> load_overrides_text(std::string_view csv);
std::vector<MatchOverride> load_overrides(const std::filesystem::path& path);

struct MatchPair {
  std::size_t gold = 0;
  std::size_t extracted = 0;
};

struct MatchResult {
  std::vector<MatchPair> pairs;
  std::vector<bool> gold_matched;
  std::vector<std::size_t> unmatched_gold;
  std::vector<std::size_t> unmatched_extracted;
  std::size_t extracted_total = 0;
  std::vector<std::string> warnings;

  // Distinct extracted terms matched to some gold feature.
  std::size_t true_positives() const { return extracted_total - unmatched_extracted.size(); }
  std::size_t false_positives() const { return unmatched_extracted.size(); }
};

// Overrides first; remaining gold features (file order) take the shortest unused
// extracted term that contains all words of the name or an alias. Throws
// ConfigError when an override names an unknown gold feature.
MatchResult match(const GoldList& gold, const std::vector<std::vector<std::string>>& extracted,
                  const std::vector<MatchOverride>& overrides = {});

// Matched / offered within the scope (all features when entity is nullopt).
std::optional<double> recall(const MatchResult& result, const GoldList& gold,
                             const std::optional<std::string>& entity = std::nullopt);

std::optional<double> precision(std::size_t true_positives, std::size_t false_positives);

// Feature x entity matrix with the extracted terms per feature, a recall row
// and overall precision, as Markdown.
std::string render_eval(const GoldList& gold, const std::vector<std::vector<std::string>>& extracted,
                        const MatchResult& result);

}  // namespace revkano
