#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revkano/kano.hpp"
#include "revkano/sentiment.hpp"

namespace revkano {

// positive / (positive + negative); EMPTY (nullopt) when both are zero.
using SentimentBar = std::optional<double>;

// Throws std::invalid_argument for negative inputs.
SentimentBar bar(double positive, double negative);

struct CategoryScore {
  std::string category_id;
  std::string label;
  AspectScore score;
};

struct SummaryRow {
  std::optional<KanoBucket> bucket;  // nullopt = unassigned
  std::string category_id;
  std::string label;
  double positive = 0.0;
  double negative = 0.0;
  SentimentBar bar;
};

struct OverallTable {
  std::vector<SummaryRow> rows;  // bucket priority, then descending positive
  std::vector<std::string> warnings;
};

OverallTable overall_table(const std::map<std::string, KanoBucket>& assignments,
                           const std::vector<CategoryScore>& categories);

struct EntityRow {
  std::optional<KanoBucket> bucket;
  std::string category_id;
  std::string label;
  // Per entity: normalized score x 10^4, nullopt when the entity has no reviews.
  std::vector<std::optional<AspectScore>> cells;
};

struct EntityTable {
  std::vector<std::string> entities;
  std::vector<EntityRow> rows;
};

inline constexpr double kEntityDisplayScale = 1e4;

// Rows follow the overall table's order. Missing (entity, category) scores count as zero.
EntityTable entity_table(const OverallTable& overall,
                         const std::map<std::pair<std::string, std::string>, AspectScore>& entity_scores,
                         const std::map<std::string, std::size_t>& review_counts);

enum class ReportFormat { csv, md, html };
std::optional<ReportFormat> parse_report_format(std::string_view name);
std::string_view extension(ReportFormat f);

std::string render_overall(const OverallTable& table, ReportFormat format);
std::string render_entities(const EntityTable& table, ReportFormat format);

// Writes overall.<ext> and entities.<ext>; returns the written paths.
std::vector<std::filesystem::path> render(const OverallTable& overall, const EntityTable& entities,
                                          ReportFormat format, const std::filesystem::path& out_dir);

// Inverse of the CSV renderer for the numeric columns.
struct ParsedOverallRow {
  std::string bucket;
  std::string category_id;
  std::string label;
  double positive = 0.0;
  double negative = 0.0;
  SentimentBar bar;
};
std::vector<ParsedOverallRow> parse_overall_csv(std::string_view csv);

}  // namespace revkano
