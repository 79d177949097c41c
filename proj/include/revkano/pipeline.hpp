#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revkano/miner.hpp"
#include "revkano/report.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

struct RunConfig {
  std::filesystem::path reviews;
  std::filesystem::path lexicon_dir = std::filesystem::path(REVKANO_DATA_DIR) / "lexicon";
  std::filesystem::path tag_lexicon;
  std::filesystem::path categories;
  std::filesystem::path votes;
  std::filesystem::path assignments;
  std::filesystem::path gold;
  std::filesystem::path overrides;
  std::filesystem::path out_dir = "out";

  double min_support = 0.0004;
  double min_confidence = 0.6;
  long long prune_threshold = 3;
  int max_gap = 2;
  long long min_sentences = 2;
  bool collapse_elongation = false;
  bool include_frequent_singletons = false;
  ReportFormat format = ReportFormat::html;
  int jobs = 1;
  std::uint64_t seed = 0;  // accepted, unused: every stage is deterministic

  // Throws ConfigError on out-of-range parameters.
  void validate() const;
  MinerConfig miner() const;
};

/// A stage input that an earlier subcommand should have produced.
class MissingStageInput : public InputError {
 public:
  MissingStageInput(const std::filesystem::path& path, const std::string& producer);
};

// Artifact file names inside out_dir.
namespace artifact {
inline constexpr const char* kSentences = "corpus.jsonl";
inline constexpr const char* kReviewCounts = "review_counts.json";
inline constexpr const char* kRejects = "rejects.csv";
inline constexpr const char* kNounPhrases = "noun_phrases.jsonl";
inline constexpr const char* kTransactions = "transactions.jsonl";
inline constexpr const char* kItemsets = "itemsets.jsonl";
inline constexpr const char* kRules = "rules.jsonl";
inline constexpr const char* kAspectTerms = "aspect_terms.jsonl";
inline constexpr const char* kCategories = "categories.json";
inline constexpr const char* kSurvey = "survey.json";
inline constexpr const char* kAssignments = "assignments.json";
inline constexpr const char* kScores = "scores.jsonl";
inline constexpr const char* kReportDir = "report";
inline constexpr const char* kEval = "eval.md";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace artifact

// Each stage reads its inputs from out_dir (plus its own flags), writes its
// artifacts, records them in manifest.json and logs progress to `log`.
void run_ingest(const RunConfig& config, std::ostream& log);
void run_mine(const RunConfig& config, std::ostream& log);
void run_bucketize(const RunConfig& config, std::ostream& log);
void run_score(const RunConfig& config, std::ostream& log);
void run_report(const RunConfig& config, std::ostream& log);
void run_eval(const RunConfig& config, std::ostream& log);
// ingest -> mine -> bucketize -> score -> report (-> eval when --gold is set)
void run_pipeline(const RunConfig& config, std::ostream& log);

// Digest of the manifest's stage records (config, inputs, artifacts).
std::string manifest_digest(const std::filesystem::path& out_dir);

}  // namespace revkano
