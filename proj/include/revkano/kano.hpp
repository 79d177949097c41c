#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revkano/corpus.hpp"

namespace revkano {

// Declaration order is the tie-break priority.
enum class KanoBucket { MUST_HAVE, ONE_DIMENSIONAL, DELIGHTER, INDIFFERENT, REVERSE };

inline constexpr std::array<KanoBucket, 5> kAllBuckets = {KanoBucket::MUST_HAVE, KanoBucket::ONE_DIMENSIONAL,
                                                          KanoBucket::DELIGHTER, KanoBucket::INDIFFERENT,
                                                          KanoBucket::REVERSE};

std::string_view to_string(KanoBucket b);       // "must_have", ...
std::string_view display_name(KanoBucket b);    // "Must Haves", ...
// Case-insensitive; '-' and ' ' accepted in place of '_'.
std::optional<KanoBucket> parse_bucket(std::string_view name);

struct SurveyVote {
  std::string subject_id;
  std::string category_id;
  KanoBucket bucket = KanoBucket::MUST_HAVE;

  bool operator==(const SurveyVote&) const = default;
};

struct BucketAssignment {
  std::string category_id;
  KanoBucket bucket = KanoBucket::MUST_HAVE;
  std::array<std::size_t, 5> tally{};  // indexed by bucket
  std::size_t total_votes = 0;
  bool tied = false;

  bool operator==(const BucketAssignment&) const = default;
};

struct VoteLoad {
  std::vector<SurveyVote> votes;
  std::vector<Reject> rejects;
};

// votes.csv with header subject_id,category_id,bucket. Lines with unknown
// buckets or categories and repeated (subject, category) pairs are rejected.
VoteLoad load_votes_text(std::string_view csv, const std::set<std::string>& known_categories);
VoteLoad load_votes(const std::filesystem::path& path, const std::set<std::string>& known_categories);

// Strict maximum wins; ties resolved by bucket priority and flagged.
// nullopt for an empty vote list.
std::optional<BucketAssignment> majority(const std::vector<SurveyVote>& votes);

struct Bucketization {
  std::vector<BucketAssignment> assigned;  // in category order
  std::vector<std::string> unassigned;     // categories without votes
};

Bucketization bucketize(const std::vector<SurveyVote>& votes, const std::vector<std::string>& category_ids);

// assignments.json: [{"category_id", "bucket", ...}]. Tallies are written
// when known and ignored on read.
std::string assignments_to_json(const std::vector<BucketAssignment>& assignments);
std::map<std::string, KanoBucket> assignments_from_json(std::string_view text);

}  // namespace revkano
