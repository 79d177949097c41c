#include "revkano/pipeline.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"
#include "revkano/corpus.hpp"
#include "revkano/digest.hpp"
#include "revkano/eval.hpp"
#include "revkano/kano.hpp"
#include "revkano/sentiment.hpp"
#include "revkano/tagger.hpp"

namespace revkano {

using nlohmann::json;
namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0)) throw ConfigError("--min-support must be in (0, 1]");
  if (!(min_confidence >= 0.0 && min_confidence <= 1.0)) throw ConfigError("--min-confidence must be in [0, 1]");
  if (prune_threshold < 0) throw ConfigError("--prune-threshold must be >= 0");
  if (max_gap < 0) throw ConfigError("--max-gap must be >= 0");
  if (min_sentences < 1) throw ConfigError("--min-sentences must be >= 1");
  if (jobs < 0) throw ConfigError("--jobs must be >= 0");
}

MinerConfig RunConfig::miner() const {
  MinerConfig m;
  m.min_support = min_support;
  m.min_confidence = min_confidence;
  m.prune_threshold = static_cast<std::size_t>(prune_threshold);
  m.max_gap = max_gap;
  m.min_sentences = static_cast<std::size_t>(min_sentences);
  m.include_frequent_singletons = include_frequent_singletons;
  m.jobs = jobs;
  return m;
}

MissingStageInput::MissingStageInput(const fs::path& path, const std::string& producer)
    : InputError("missing " + path.string() + "; run `revkano " + producer + "` first") {}

namespace {

std::string read_stage_input(const RunConfig& c, const char* name, const std::string& producer) {
  fs::path p = c.out_dir / name;
  if (!fs::exists(p)) throw MissingStageInput(p, producer);
  return read_file(p);
}

std::string read_user_input(const fs::path& p, const char* flag) {
  if (p.empty()) throw ConfigError(std::string(flag) + " is required");
  if (!fs::exists(p)) throw InputError("input not found: " + p.string());
  return read_file(p);
}

json config_record(const RunConfig& c) {
  return {{"min_support", c.min_support},
          {"min_confidence", c.min_confidence},
          {"prune_threshold", c.prune_threshold},
          {"max_gap", c.max_gap},
          {"min_sentences", c.min_sentences},
          {"collapse_elongation", c.collapse_elongation},
          {"include_frequent_singletons", c.include_frequent_singletons},
          {"format", std::string(extension(c.format))},
          {"seed", c.seed}};
}

// Records a stage in manifest.json: config, input digests, artifact digests.
void record_stage(const RunConfig& c, const std::string& stage, const std::vector<fs::path>& inputs,
                  const std::vector<fs::path>& artifacts) {
  fs::path mpath = c.out_dir / artifact::kManifest;
  json manifest = json::object();
  if (fs::exists(mpath)) {
    try {
      manifest = json::parse(read_file(mpath));
    } catch (const json::exception&) {
      manifest = json::object();
    }
  }
  json in = json::object();
  for (const auto& p : inputs) {
    if (p.empty() || !fs::is_regular_file(p)) continue;
    // Stage artifacts are keyed relative to out_dir so runs into different directories compare equal.
    auto rel = p.lexically_relative(c.out_dir);
    bool inside = !rel.empty() && *rel.begin() != "..";
    in[inside ? rel.generic_string() : p.string()] = sha256_file(p);
  }
  json out = json::object();
  for (const auto& p : artifacts) out[fs::relative(p, c.out_dir).generic_string()] = sha256_file(p);
  manifest["stages"][stage] = {{"config", config_record(c)}, {"inputs", in}, {"artifacts", out}};
  write_file(mpath, manifest.dump(2) + "\n");
}

fs::path write_artifact(const RunConfig& c, const char* name, std::string_view contents) {
  fs::path p = c.out_dir / name;
  write_file(p, contents);
  return p;
}

std::string sentence_text(const Sentence& s) {
  std::vector<std::string> words;
  for (const auto& t : s.tokens) words.push_back(t.surface);
  return join(words, " ");
}

std::vector<AspectCategory> categories_from_json(const std::string& text) {
  auto load = load_categories_text(text, {});
  return load.categories;
}

}  // namespace

void run_ingest(const RunConfig& c, std::ostream& log) {
  c.validate();
  if (c.reviews.empty()) throw ConfigError("--reviews is required");
  if (!fs::exists(c.reviews)) throw InputError("reviews file not found: " + c.reviews.string());
  auto result = ingest_reviews(c.reviews);
  TokenizeOptions topts;
  topts.collapse_elongation = c.collapse_elongation;
  auto sentences = build_sentences(result.corpus, topts);
  std::vector<fs::path> out{write_artifact(c, artifact::kSentences, sentences_to_jsonl(sentences)),
                            write_artifact(c, artifact::kReviewCounts, review_counts_to_json(result.corpus.review_counts())),
                            write_artifact(c, artifact::kRejects, rejects_csv(result.rejects))};
  record_stage(c, "ingest", {c.reviews}, out);
  log << "ingest: " << result.corpus.reviews().size() << " reviews, " << result.corpus.entity_count()
      << " entities, " << sentences.size() << " sentences, " << result.rejects.size() << " rejected\n";
}

void run_mine(const RunConfig& c, std::ostream& log) {
  c.validate();
  auto sentences = sentences_from_jsonl(read_stage_input(c, artifact::kSentences, "ingest"));
  LexiconTagger tagger;
  if (!c.tag_lexicon.empty()) tagger.load_overrides(c.tag_lexicon);
  auto phrases = extract_noun_phrases(sentences, tagger, {}, c.jobs);
  auto mined = mine_aspects(sentences, phrases, c.miner());

  CategoryLoad load;
  if (!c.categories.empty()) {
    load = load_categories_text(read_user_input(c.categories, "--categories"), mined.terms);
  } else {
    load = load_categories_text("", mined.terms);
  }
  for (const auto& w : load.warnings) log << "warning: " << w << "\n";
  auto categories = with_singleton_categories(load);

  // Survey configuration with up to three example sentences per category.
  json survey = {{"survey_id", "kano"}, {"open", true}, {"categories", json::array()}};
  for (const auto& cat : categories) {
    json snippets = json::array();
    for (const auto& s : sentences) {
      if (snippets.size() >= 3) break;
      bool hit = false;
      for (const auto& m : cat.members) hit = hit || !find_occurrences(s.tokens, m, c.max_gap).empty();
      if (hit) snippets.push_back(sentence_text(s));
    }
    survey["categories"].push_back(
        {{"category_id", cat.category_id}, {"label", cat.label}, {"members", cat.members}, {"sample_snippets", snippets}});
  }

  std::vector<fs::path> out{write_artifact(c, artifact::kNounPhrases, noun_phrases_to_jsonl(phrases)),
                            write_artifact(c, artifact::kTransactions, transactions_to_jsonl(mined.transactions)),
                            write_artifact(c, artifact::kItemsets, itemsets_to_jsonl(mined.frequent)),
                            write_artifact(c, artifact::kRules, rules_to_jsonl(mined.rules)),
                            write_artifact(c, artifact::kAspectTerms, aspect_terms_to_jsonl(mined.terms)),
                            write_artifact(c, artifact::kCategories, categories_to_json(categories)),
                            write_artifact(c, artifact::kSurvey, survey.dump(2) + "\n")};
  record_stage(c, "mine", {c.out_dir / artifact::kSentences, c.tag_lexicon, c.categories}, out);
  log << "mine: " << phrases.size() << " noun phrases, " << mined.frequent.sets().size() << " frequent itemsets, "
      << mined.rules.size() << " rules, " << mined.terms.size() << " aspect terms, " << categories.size()
      << " categories\n";
}

void run_bucketize(const RunConfig& c, std::ostream& log) {
  c.validate();
  auto categories = categories_from_json(read_stage_input(c, artifact::kCategories, "mine"));
  std::vector<std::string> ids;
  for (const auto& cat : categories) ids.push_back(cat.category_id);
  std::set<std::string> known(ids.begin(), ids.end());

  std::vector<fs::path> inputs{c.out_dir / artifact::kCategories};
  std::vector<fs::path> out;
  if (!c.assignments.empty()) {
    auto direct = assignments_from_json(read_user_input(c.assignments, "--assignments"));
    json doc = json::array();
    for (const auto& id : ids) {
      if (auto it = direct.find(id); it != direct.end()) {
        doc.push_back({{"category_id", id}, {"bucket", std::string(to_string(it->second))}});
      }
    }
    for (const auto& [id, _] : direct) {
      if (!known.count(id)) log << "warning: assignment for unknown category " << id << "\n";
    }
    out.push_back(write_artifact(c, artifact::kAssignments, doc.dump(2) + "\n"));
    inputs.push_back(c.assignments);
    log << "bucketize: " << doc.size() << " of " << ids.size() << " categories assigned from file\n";
  } else if (!c.votes.empty()) {
    auto load = load_votes_text(read_user_input(c.votes, "--votes"), known);
    auto result = bucketize(load.votes, ids);
    out.push_back(write_artifact(c, artifact::kAssignments, assignments_to_json(result.assigned)));
    out.push_back(write_artifact(c, "votes_rejects.csv", rejects_csv(load.rejects)));
    inputs.push_back(c.votes);
    std::size_t ties = 0;
    for (const auto& a : result.assigned) ties += a.tied ? 1 : 0;
    log << "bucketize: " << load.votes.size() << " votes, " << load.rejects.size() << " rejected, "
        << result.assigned.size() << " assigned, " << ties << " ties flagged, " << result.unassigned.size()
        << " unassigned\n";
  } else {
    out.push_back(write_artifact(c, artifact::kAssignments, "[]\n"));
    log << "bucketize: no --votes or --assignments; all " << ids.size() << " categories unassigned\n";
  }
  record_stage(c, "bucketize", inputs, out);
}

void run_score(const RunConfig& c, std::ostream& log) {
  c.validate();
  auto sentences = sentences_from_jsonl(read_stage_input(c, artifact::kSentences, "ingest"));
  auto terms = aspect_terms_from_jsonl(read_stage_input(c, artifact::kAspectTerms, "mine"));
  auto categories = categories_from_json(read_stage_input(c, artifact::kCategories, "mine"));
  auto lexicon = load_lexicon_dir(c.lexicon_dir);
  if (!lexicon.conflicts.empty()) {
    log << "warning: " << lexicon.conflicts.size() << " words in both lexicon lists dropped\n";
  }
  ScoreOptions sopts;
  sopts.max_gap = c.max_gap;
  sopts.jobs = c.jobs;
  auto table = score_corpus(sentences, terms, categories, lexicon, sopts);
  std::vector<fs::path> out{write_artifact(c, artifact::kScores, scores_to_jsonl(table))};
  record_stage(c, "score",
               {c.out_dir / artifact::kSentences, c.out_dir / artifact::kAspectTerms,
                c.out_dir / artifact::kCategories, c.lexicon_dir / "positive-words.txt",
                c.lexicon_dir / "negative-words.txt"},
               out);
  log << "score: " << terms.size() << " terms, " << categories.size() << " categories, " << table.entities.size()
      << " entities\n";
}

void run_report(const RunConfig& c, std::ostream& log) {
  c.validate();
  auto categories = categories_from_json(read_stage_input(c, artifact::kCategories, "mine"));
  auto assignments = assignments_from_json(read_stage_input(c, artifact::kAssignments, "bucketize"));
  auto counts = review_counts_from_json(read_stage_input(c, artifact::kReviewCounts, "ingest"));
  auto scores_text = read_stage_input(c, artifact::kScores, "score");

  std::map<std::string, AspectScore> category_scores;
  std::map<std::pair<std::string, std::string>, AspectScore> entity_scores;
  for (const auto& line : split(scores_text, '\n')) {
    if (trim(line).empty()) continue;
    auto j = json::parse(line);
    AspectScore s{j.at("positive").get<double>(), j.at("negative").get<double>()};
    auto kind = j.at("kind").get<std::string>();
    if (kind == "category") category_scores[j.at("subject").get<std::string>()] = s;
    if (kind == "entity_category") entity_scores[{j.at("entity").get<std::string>(), j.at("subject").get<std::string>()}] = s;
  }
  std::vector<CategoryScore> rows;
  for (const auto& cat : categories) rows.push_back({cat.category_id, cat.label, category_scores[cat.category_id]});
  auto overall = overall_table(assignments, rows);
  for (const auto& w : overall.warnings) log << "warning: " << w << "\n";
  auto entities = entity_table(overall, entity_scores, counts);
  auto written = render(overall, entities, c.format, c.out_dir / artifact::kReportDir);
  record_stage(c, "report",
               {c.out_dir / artifact::kCategories, c.out_dir / artifact::kAssignments,
                c.out_dir / artifact::kReviewCounts, c.out_dir / artifact::kScores},
               written);
  log << "report: " << overall.rows.size() << " rows written to " << (c.out_dir / artifact::kReportDir).string()
      << "\n";
}

void run_eval(const RunConfig& c, std::ostream& log) {
  c.validate();
  auto gold = load_gold_text(read_user_input(c.gold, "--gold"));
  std::vector<MatchOverride> overrides;
  if (!c.overrides.empty()) overrides = load_overrides_text(read_user_input(c.overrides, "--overrides"));
  auto terms = aspect_terms_from_jsonl(read_stage_input(c, artifact::kAspectTerms, "mine"));
  std::vector<std::vector<std::string>> extracted;
  for (const auto& t : terms) extracted.push_back(t.words);
  auto result = match(gold, extracted, overrides);
  auto text = render_eval(gold, extracted, result);
  std::vector<fs::path> out{write_artifact(c, artifact::kEval, text)};
  record_stage(c, "eval", {c.gold, c.overrides, c.out_dir / artifact::kAspectTerms}, out);
  log << text;
}

void run_pipeline(const RunConfig& c, std::ostream& log) {
  c.validate();
  fs::create_directories(c.out_dir);
  fs::remove(c.out_dir / artifact::kManifest);
  run_ingest(c, log);
  run_mine(c, log);
  run_bucketize(c, log);
  run_score(c, log);
  run_report(c, log);
  if (!c.gold.empty()) run_eval(c, log);
}

std::string manifest_digest(const fs::path& out_dir) {
  fs::path p = out_dir / artifact::kManifest;
  if (!fs::exists(p)) throw InputError("no manifest in " + out_dir.string());
  return sha256_file(p);
}

}  // namespace revkano
