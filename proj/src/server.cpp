#include "revkano/server.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <map>
#include <stdexcept>

#include "httplib.h"
#include "revkano/text_util.hpp"

namespace revkano {

using nlohmann::json;

SurveyConfig survey_config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("survey config: ") + e.what());
  }
  SurveyConfig cfg;
  cfg.survey_id = doc.value("survey_id", std::string("kano"));
  cfg.open = doc.value("open", true);
  for (const auto& c : doc.at("categories")) {
    SurveyCategory cat;
    cat.category_id = c.at("category_id").get<std::string>();
    cat.label = c.value("label", cat.category_id);
    cat.members = c.value("members", std::vector<std::vector<std::string>>{});
    cat.sample_snippets = c.value("sample_snippets", std::vector<std::string>{});
    cfg.categories.push_back(std::move(cat));
  }
  return cfg;
}

SurveyConfig load_survey_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  return survey_config_from_json(text);
}

SurveyService::SurveyService(std::optional<SurveyConfig> config, std::filesystem::path votes_log)
    : config_(std::move(config)), log_path_(std::move(votes_log)) {
  if (!config_) return;
  open_ = config_->open;
  for (const auto& c : config_->categories) category_ids_.insert(c.category_id);
  if (log_path_.empty() || !std::filesystem::exists(log_path_)) return;
  for (const auto& line : split(read_file(log_path_), '\n')) {
    if (trim(line).empty()) continue;
    try {
      auto j = json::parse(line);
      if (j.value("event", "") == "close") {
        open_ = false;
        continue;
      }
      SurveyVote v{j.at("subject_id").get<std::string>(), j.at("category_id").get<std::string>(), KanoBucket::MUST_HAVE};
      auto b = parse_bucket(j.at("bucket").get<std::string>());
      if (!b || !category_ids_.count(v.category_id) || !voted_.emplace(v.subject_id, v.category_id).second) {
        ++replay_skipped_;
        continue;
      }
      v.bucket = *b;
      votes_.push_back(std::move(v));
    } catch (const json::exception&) {
      ++replay_skipped_;
    }
  }
}

void SurveyService::append_log(const json& record) {
  if (log_path_.empty()) return;
  if (log_path_.has_parent_path()) std::filesystem::create_directories(log_path_.parent_path());
  std::string line = record.dump() + "\n";
  int fd = ::open(log_path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cannot open vote log " + log_path_.string());
  std::size_t written = 0;
  while (written < line.size()) {
    auto n = ::write(fd, line.data() + written, line.size() - written);
    if (n <= 0) {
      ::close(fd);
      throw std::runtime_error("cannot append to vote log " + log_path_.string());
    }
    written += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
}

SurveyService::Response SurveyService::categories() const {
  if (!config_) return {404, {{"error", "no survey configured"}}};
  json out = json::array();
  for (const auto& c : config_->categories) {
    out.push_back({{"category_id", c.category_id},
                   {"label", c.label},
                   {"members", c.members},
                   {"sample_snippets", c.sample_snippets}});
  }
  return {200, out};
}

SurveyService::Response SurveyService::submit_vote(std::string_view request_body) {
  if (!config_) return {404, {{"error", "no survey configured"}}};
  json body;
  try {
    body = json::parse(request_body);
  } catch (const json::parse_error&) {
    return {400, {{"error", "body is not JSON"}}};
  }
  auto field = [&](const char* key) -> std::optional<std::string> {
    if (!body.is_object() || !body.contains(key) || !body[key].is_string()) return std::nullopt;
    return body[key].get<std::string>();
  };
  auto subject = field("subject_id");
  auto category = field("category_id");
  auto bucket_name = field("bucket");

  std::lock_guard lock(mu_);
  if (!open_) return {403, {{"error", "survey is closed"}}};
  if (!subject || trim(*subject).empty()) return {422, {{"error", "subject_id required"}}};
  if (!category || !category_ids_.count(*category)) return {422, {{"error", "unknown category_id"}}};
  auto bucket = bucket_name ? parse_bucket(*bucket_name) : std::nullopt;
  if (!bucket) return {422, {{"error", "invalid bucket"}}};
  if (voted_.count({*subject, *category})) return {409, {{"error", "already voted"}}};

  SurveyVote v{*subject, *category, *bucket};
  append_log({{"subject_id", v.subject_id}, {"category_id", v.category_id}, {"bucket", std::string(to_string(v.bucket))}});
  voted_.emplace(v.subject_id, v.category_id);
  votes_.push_back(v);
  return {201, {{"subject_id", v.subject_id}, {"category_id", v.category_id}, {"bucket", std::string(to_string(v.bucket))}}};
}

json SurveyService::tally_locked() const {
  json out = {{"open", open_}, {"categories", json::array()}};
  if (!config_) return out;
  out["survey_id"] = config_->survey_id;
  std::vector<std::string> ids;
  for (const auto& c : config_->categories) ids.push_back(c.category_id);
  auto result = bucketize(votes_, ids);
  std::map<std::string, const BucketAssignment*> by_id;
  for (const auto& a : result.assigned) by_id[a.category_id] = &a;
  for (const auto& c : config_->categories) {
    json tally = json::object();
    json entry = {{"category_id", c.category_id}, {"label", c.label}};
    auto it = by_id.find(c.category_id);
    for (auto b : kAllBuckets) {
      tally[std::string(to_string(b))] = it == by_id.end() ? 0 : it->second->tally[static_cast<std::size_t>(b)];
    }
    entry["tally"] = tally;
    if (it == by_id.end()) {
      entry["total_votes"] = 0;
      entry["assignment"] = nullptr;
      entry["tied"] = false;
    } else {
      entry["total_votes"] = it->second->total_votes;
      entry["assignment"] = std::string(to_string(it->second->bucket));
      entry["tied"] = it->second->tied;
    }
    out["categories"].push_back(entry);
  }
  return out;
}

SurveyService::Response SurveyService::tally() const {
  std::lock_guard lock(mu_);
  return {200, tally_locked()};
}

SurveyService::Response SurveyService::close() {
  if (!config_) return {404, {{"error", "no survey configured"}}};
  std::lock_guard lock(mu_);
  if (open_) {
    append_log({{"event", "close"}});
    open_ = false;
  }
  return {200, tally_locked()};
}

std::vector<SurveyVote> SurveyService::votes() const {
  std::lock_guard lock(mu_);
  return votes_;
}

bool SurveyService::is_open() const {
  std::lock_guard lock(mu_);
  return open_;
}

namespace {

constexpr const char* kFallbackPage =
    "<!DOCTYPE html><html><head><meta charset=\"utf-8\"><title>Kano survey</title></head><body>"
    "<h1>Kano survey</h1><p>No survey UI bundle is configured (start with --ui-dir).</p>"
    "<p>API: <a href=\"/api/categories\">/api/categories</a>, <a href=\"/api/tally\">/api/tally</a>, "
    "POST /api/votes. Rendered report: <a href=\"/report/\">/report/</a>.</p></body></html>";

void reply(httplib::Response& res, const SurveyService::Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

SurveyServer::SurveyServer(SurveyService& service, ServerOptions options)
    : service_(service), http_(std::make_unique<httplib::Server>()) {
  auto& srv = *http_;
  srv.Get("/api/categories", [this](const httplib::Request&, httplib::Response& res) { reply(res, service_.categories()); });
  srv.Get("/api/tally", [this](const httplib::Request&, httplib::Response& res) { reply(res, service_.tally()); });
  srv.Post("/api/votes", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.submit_vote(req.body));
  });
  srv.Post("/api/close", [this](const httplib::Request&, httplib::Response& res) { reply(res, service_.close()); });
  if (!options.report_dir.empty()) {
    srv.set_mount_point("/report", options.report_dir.string());
    srv.Get("/report", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/report/overall.html"); });
  }
  if (!options.ui_dir.empty()) {
    srv.set_mount_point("/", options.ui_dir.string());
  } else {
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_content(kFallbackPage, "text/html"); });
  }
}

SurveyServer::~SurveyServer() { stop(); }

bool SurveyServer::listen(const std::string& host, int port) { return http_->listen(host, port); }
int SurveyServer::bind_any_port(const std::string& host) { return http_->bind_to_any_port(host); }
bool SurveyServer::listen_after_bind() { return http_->listen_after_bind(); }
void SurveyServer::stop() {
  if (http_ && http_->is_running()) http_->stop();
}
void SurveyServer::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace revkano
