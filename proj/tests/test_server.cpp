#include <atomic>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "revkano/server.hpp"

using namespace revkano;
namespace fs = std::filesystem;

namespace {

SurveyConfig two_categories() {
  SurveyConfig c;
  c.survey_id = "t";
  c.categories = {{"stickers", "sticker, emoji", {{"sticker"}, {"emoji"}}, {"love the stickers"}},
                  {"update", "update", {{"update"}}, {}}};
  return c;
}

fs::path temp_log(const char* name) {
  auto p = fs::temp_directory_path() / ("revkano_test_" + std::to_string(::getpid()) + "_" + name + ".jsonl");
  fs::remove(p);
  return p;
}

std::string vote(const std::string& subject, const std::string& category, const std::string& bucket) {
  return nlohmann::json{{"subject_id", subject}, {"category_id", category}, {"bucket", bucket}}.dump();
}

}  // namespace

TEST_CASE("service: status codes") {
  auto log = temp_log("codes");
  SurveyService svc(two_categories(), log);
  CHECK(svc.submit_vote(vote("s1", "stickers", "delighter")).status == 201);
  CHECK(svc.submit_vote(vote("s1", "stickers", "must_have")).status == 409);
  CHECK(svc.submit_vote(vote("s1", "stickers", "awesome")).status == 422);
  CHECK(svc.submit_vote(vote("s1", "nope", "delighter")).status == 422);
  CHECK(svc.submit_vote(vote("", "update", "delighter")).status == 422);
  CHECK(svc.submit_vote("{not json").status == 400);
  CHECK(svc.submit_vote(vote("s2", "stickers", "Delighter")).status == 201);

  auto t = svc.tally();
  CHECK(t.status == 200);
  auto& cat = t.body["categories"][0];
  CHECK(cat["category_id"] == "stickers");
  CHECK(cat["total_votes"] == 2);
  CHECK(cat["assignment"] == "delighter");
  CHECK(t.body["categories"][1]["assignment"].is_null());

  CHECK(svc.close().status == 200);
  CHECK(svc.submit_vote(vote("s3", "update", "reverse")).status == 403);
  fs::remove(log);
}

TEST_CASE("service: no survey configured") {
  SurveyService svc(std::nullopt, temp_log("none"));
  CHECK(svc.categories().status == 404);
  CHECK(svc.submit_vote(vote("s1", "stickers", "delighter")).status == 404);
}

TEST_CASE("service: log replay after restart") {
  auto log = temp_log("replay");
  {
    SurveyService svc(two_categories(), log);
    svc.submit_vote(vote("s1", "stickers", "delighter"));
    svc.submit_vote(vote("s2", "update", "must_have"));
  }
  {
    SurveyService svc(two_categories(), log);
    CHECK(svc.votes().size() == 2);
    CHECK(svc.submit_vote(vote("s1", "stickers", "reverse")).status == 409);
    svc.close();
  }
  SurveyService svc(two_categories(), log);
  CHECK_FALSE(svc.is_open());
  CHECK(svc.votes().size() == 2);
  fs::remove(log);
}

TEST_CASE("http: routes and concurrent duplicates") {
  auto log = temp_log("http");
  SurveyService svc(two_categories(), log);
  SurveyServer server(svc);
  int port = server.bind_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto cats = cli.Get("/api/categories");
  REQUIRE(cats);
  CHECK(cats->status == 200);
  CHECK(nlohmann::json::parse(cats->body).size() == 2);

  std::atomic<int> created{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> workers;
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&] {
      httplib::Client c("127.0.0.1", port);
      auto r = c.Post("/api/votes", vote("dup", "update", "reverse"), "application/json");
      if (r && r->status == 201) ++created;
      if (r && r->status == 409) ++conflicts;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(created == 1);
  CHECK(conflicts == 7);

  auto bad = cli.Post("/api/votes", vote("x", "update", "meh"), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 422);
  auto tally = cli.Get("/api/tally");
  REQUIRE(tally);
  CHECK(nlohmann::json::parse(tally->body)["categories"][1]["total_votes"] == 1);
  auto closed = cli.Post("/api/close", "", "application/json");
  REQUIRE(closed);
  CHECK(closed->status == 200);
  auto late = cli.Post("/api/votes", vote("y", "update", "reverse"), "application/json");
  CHECK(late->status == 403);
  auto root = cli.Get("/");
  REQUIRE(root);
  CHECK(root->status == 200);

  server.stop();
  th.join();
  fs::remove(log);
}
