#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "revkano/kano.hpp"

namespace httplib {
class Server;
}

namespace revkano {

struct SurveyCategory {
  std::string category_id;
  std::string label;
  std::vector<std::vector<std::string>> members;
  std::vector<std::string> sample_snippets;
};

struct SurveyConfig {
  std::string survey_id = "kano";
  bool open = true;
  std::vector<SurveyCategory> categories;
};

// The survey.json written by `revkano mine`.
SurveyConfig survey_config_from_json(std::string_view text);
SurveyConfig load_survey_config(const std::filesystem::path& path);

/// Survey state behind the HTTP API. Votes are appended to a JSONL log and
/// fsync'd before being acknowledged; the log is replayed on construction.
class SurveyService {
 public:
  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  // An empty config path means no survey is configured.
  SurveyService(std::optional<SurveyConfig> config, std::filesystem::path votes_log);

  Response categories() const;
  Response submit_vote(std::string_view request_body);
  Response tally() const;
  Response close();

  std::vector<SurveyVote> votes() const;
  bool is_open() const;
  std::size_t replay_skipped() const { return replay_skipped_; }

 private:
  void append_log(const nlohmann::json& record);
  nlohmann::json tally_locked() const;

  std::optional<SurveyConfig> config_;
  std::filesystem::path log_path_;
  mutable std::mutex mu_;
  bool open_ = false;
  std::vector<SurveyVote> votes_;
  std::set<std::pair<std::string, std::string>> voted_;
  std::set<std::string> category_ids_;
  std::size_t replay_skipped_ = 0;
};

struct ServerOptions {
  std::filesystem::path ui_dir;      // served at /, built-in page when empty
  std::filesystem::path report_dir;  // served at /report/
};

class SurveyServer {
 public:
  SurveyServer(SurveyService& service, ServerOptions options = {});
  ~SurveyServer();

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it (or -1); then call listen_after_bind().
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  SurveyService& service_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace revkano
