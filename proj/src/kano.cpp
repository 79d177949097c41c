#include "revkano/kano.hpp"

#include <algorithm>

#include "json.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

namespace {

constexpr std::array<std::string_view, 5> kIds = {"must_have", "one_dimensional", "delighter", "indifferent",
                                                  "reverse"};
constexpr std::array<std::string_view, 5> kDisplay = {"Must Haves", "One-Dimensional", "Delighters", "Indifferent",
                                                      "Reverse"};

}  // namespace

std::string_view to_string(KanoBucket b) { return kIds[static_cast<std::size_t>(b)]; }
std::string_view display_name(KanoBucket b) { return kDisplay[static_cast<std::size_t>(b)]; }

std::optional<KanoBucket> parse_bucket(std::string_view name) {
  std::string key = to_lower(trim(name));
  std::replace(key.begin(), key.end(), '-', '_');
  std::replace(key.begin(), key.end(), ' ', '_');
  for (std::size_t i = 0; i < kIds.size(); ++i) {
    if (key == kIds[i]) return static_cast<KanoBucket>(i);
  }
  return std::nullopt;
}

VoteLoad load_votes_text(std::string_view csv, const std::set<std::string>& known_categories) {
  VoteLoad load;
  auto rows = parse_csv(csv);
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line = r + 1;
    if (r == 0 && !row.empty() && trim(row[0]) == "subject_id") continue;
    if (row.size() != 3) {
      load.rejects.push_back({line, "expected 3 fields"});
      continue;
    }
    SurveyVote v{trim(row[0]), trim(row[1]), KanoBucket::MUST_HAVE};
    auto bucket = parse_bucket(row[2]);
    if (v.subject_id.empty()) {
      load.rejects.push_back({line, "empty subject_id"});
    } else if (!bucket) {
      load.rejects.push_back({line, "unknown bucket " + trim(row[2])});
    } else if (!known_categories.count(v.category_id)) {
      load.rejects.push_back({line, "unknown category " + v.category_id});
    } else if (!seen.emplace(v.subject_id, v.category_id).second) {
      load.rejects.push_back({line, "duplicate vote"});
    } else {
      v.bucket = *bucket;
      load.votes.push_back(std::move(v));
    }
  }
  return load;
}

VoteLoad load_votes(const std::filesystem::path& path, const std::set<std::string>& known_categories) {
  return load_votes_text(read_file(path), known_categories);
}

std::optional<BucketAssignment> majority(const std::vector<SurveyVote>& votes) {
  if (votes.empty()) return std::nullopt;
  BucketAssignment a;
  a.category_id = votes.front().category_id;
  for (const auto& v : votes) ++a.tally[static_cast<std::size_t>(v.bucket)];
  a.total_votes = votes.size();
  const std::size_t best = *std::max_element(a.tally.begin(), a.tally.end());
  std::size_t winners = 0;
  bool chosen = false;
  for (auto b : kAllBuckets) {
    if (a.tally[static_cast<std::size_t>(b)] != best) continue;
    ++winners;
    if (!chosen) {
      a.bucket = b;
      chosen = true;
    }
  }
  a.tied = winners > 1;
  return a;
}

Bucketization bucketize(const std::vector<SurveyVote>& votes, const std::vector<std::string>& category_ids) {
  std::map<std::string, std::vector<SurveyVote>> by_category;
  for (const auto& v : votes) by_category[v.category_id].push_back(v);
  Bucketization out;
  for (const auto& id : category_ids) {
    auto it = by_category.find(id);
    std::optional<BucketAssignment> a;
    if (it != by_category.end()) a = majority(it->second);
    if (a) {
      out.assigned.push_back(std::move(*a));
    } else {
      out.unassigned.push_back(id);
    }
  }
  return out;
}

std::string assignments_to_json(const std::vector<BucketAssignment>& assignments) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& a : assignments) {
    nlohmann::json tally = nlohmann::json::object();
    for (auto b : kAllBuckets) tally[std::string(to_string(b))] = a.tally[static_cast<std::size_t>(b)];
    doc.push_back({{"category_id", a.category_id},
                   {"bucket", std::string(to_string(a.bucket))},
                   {"tally", tally},
                   {"total_votes", a.total_votes},
                   {"tied", a.tied}});
  }
  return doc.dump(2) + "\n";
}

std::map<std::string, KanoBucket> assignments_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("assignments: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("assignments must be a JSON array");
  std::map<std::string, KanoBucket> out;
  for (const auto& entry : doc) {
    auto id = entry.at("category_id").get<std::string>();
    auto bucket = parse_bucket(entry.at("bucket").get<std::string>());
    if (!bucket) throw ConfigError("assignments: unknown bucket for " + id);
    out[id] = *bucket;
  }
  return out;
}

}  // namespace revkano
