// revkano: review aspect mining, sentiment scoring and Kano bucketization.

#include <csignal>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "revkano/pipeline.hpp"
#include "revkano/server.hpp"

namespace {

revkano::SurveyServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

void add_common(CLI::App* cmd, revkano::RunConfig& c, std::string& format) {
  cmd->add_option("--out", c.out_dir, "Artifact directory")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Thread cap for parallel kernels (0 = all cores)")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Accepted for harness compatibility; the pipeline is deterministic");
  cmd->add_option("--format", format, "Report format: csv, md or html")
      ->check(CLI::IsMember({"csv", "md", "html"}))
      ->capture_default_str();
}

void add_ingest_flags(CLI::App* cmd, revkano::RunConfig& c) {
  cmd->add_option("--reviews", c.reviews, "reviews-jsonl input");
  cmd->add_flag("--collapse-elongation", c.collapse_elongation, "Reduce letter runs of 3+ to 2 before matching");
}

void add_mine_flags(CLI::App* cmd, revkano::RunConfig& c) {
  cmd->add_option("--min-support", c.min_support, "Minimum support as a fraction of transactions")->capture_default_str();
  cmd->add_option("--min-confidence", c.min_confidence, "Minimum rule confidence")->capture_default_str();
  cmd->add_option("--prune-threshold", c.prune_threshold, "Singleton superset-difference threshold")->capture_default_str();
  cmd->add_option("--max-gap", c.max_gap, "Max tokens between words of a multi-word aspect")->capture_default_str();
  cmd->add_option("--min-sentences", c.min_sentences, "Sentences needed to accept a multi-word aspect")->capture_default_str();
  cmd->add_flag("--include-frequent-singletons", c.include_frequent_singletons,
                "Also consider frequent single items that appear in no rule");
  cmd->add_option("--tag-lexicon", c.tag_lexicon, "word<TAB>tag overrides for the built-in tagger");
  cmd->add_option("--categories", c.categories, "Manual category grouping (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aspect extraction, lexicon sentiment scoring and Kano bucketization for app reviews"};
  app.require_subcommand(1);

  revkano::RunConfig config;
  std::string format = "html";

  auto* ingest = app.add_subcommand("ingest", "Read reviews-jsonl, segment and tokenize");
  add_common(ingest, config, format);
  add_ingest_flags(ingest, config);

  auto* mine = app.add_subcommand("mine", "Chunk noun phrases, mine rules, prune into aspect terms");
  add_common(mine, config, format);
  add_mine_flags(mine, config);

  auto* bucketize = app.add_subcommand("bucketize", "Majority-vote Kano buckets per category");
  add_common(bucketize, config, format);
  bucketize->add_option("--votes", config.votes, "votes.csv (subject_id,category_id,bucket)");
  bucketize->add_option("--assignments", config.assignments, "assignments.json to use instead of votes");

  auto* score = app.add_subcommand("score", "Distance-weighted lexicon sentiment per aspect");
  add_common(score, config, format);
  score->add_option("--lexicon-dir", config.lexicon_dir, "Directory with positive-words.txt and negative-words.txt")
      ->capture_default_str();
  score->add_option("--max-gap", config.max_gap, "Max tokens between words of a multi-word aspect")->capture_default_str();

  auto* report = app.add_subcommand("report", "Render the bucketized summary and per-entity tables");
  add_common(report, config, format);

  auto* eval = app.add_subcommand("eval", "Recall/precision against a gold feature list");
  add_common(eval, config, format);
  eval->add_option("--gold", config.gold, "gold.csv (name,aliases,entities)");
  eval->add_option("--overrides", config.overrides, "overrides.csv (gold_name,extracted_term)");

  auto* pipeline = app.add_subcommand("pipeline", "Run every stage in order");
  add_common(pipeline, config, format);
  add_ingest_flags(pipeline, config);
  add_mine_flags(pipeline, config);
  pipeline->add_option("--votes", config.votes, "votes.csv");
  pipeline->add_option("--assignments", config.assignments, "assignments.json");
  pipeline->add_option("--lexicon-dir", config.lexicon_dir, "Lexicon directory")->capture_default_str();
  pipeline->add_option("--gold", config.gold, "gold.csv; runs eval when given");
  pipeline->add_option("--overrides", config.overrides, "overrides.csv");

  int port = 8080;
  std::string host = "0.0.0.0";
  std::filesystem::path survey_config;
  std::filesystem::path votes_log = "votes.log.jsonl";
  std::filesystem::path ui_dir;
  std::filesystem::path report_dir;
  auto* serve = app.add_subcommand("serve", "Host the Kano survey API");
  serve->add_option("--port", port, "Listen port")->capture_default_str();
  serve->add_option("--host", host, "Listen address")->capture_default_str();
  serve->add_option("--survey-config", survey_config, "survey.json written by `mine`");
  serve->add_option("--votes-log", votes_log, "Append-only vote log")->capture_default_str();
  serve->add_option("--ui-dir", ui_dir, "Static survey UI bundle served at /");
  serve->add_option("--report-dir", report_dir, "Rendered report directory served at /report/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  config.format = *revkano::parse_report_format(format);

  try {
    if (*serve) {
      std::optional<revkano::SurveyConfig> cfg;
      if (!survey_config.empty()) cfg = revkano::load_survey_config(survey_config);
      revkano::SurveyService service(cfg, votes_log);
      if (service.replay_skipped()) std::cerr << "warning: skipped " << service.replay_skipped() << " vote log lines\n";
      revkano::SurveyServer server(service, {ui_dir, report_dir});
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "serving on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
    config.validate();
    if (*ingest) revkano::run_ingest(config, std::cout);
    if (*mine) revkano::run_mine(config, std::cout);
    if (*bucketize) revkano::run_bucketize(config, std::cout);
    if (*score) revkano::run_score(config, std::cout);
    if (*report) revkano::run_report(config, std::cout);
    if (*eval) revkano::run_eval(config, std::cout);
    if (*pipeline) revkano::run_pipeline(config, std::cout);
  } catch (const revkano::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
