#include "doctest.h"
#include "revkano/eval.hpp"
#include "revkano/text_util.hpp"

using namespace revkano;

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(REVKANO_FIXTURE_DIR) / name; }

std::vector<std::vector<std::string>> extracted_terms() {
  std::vector<std::vector<std::string>> out;
  for (const auto& line : split(read_file(fixture("extracted_terms.txt")), '\n')) {
    if (!trim(line).empty()) out.push_back(split(std::string(trim(line)), ' '));
  }
  return out;
}

}  // namespace

TEST_CASE("match: word-subset and blanks") {
  auto gold = load_gold_text("name,aliases,entities\nSticker,,A|B\nPhoto Editing,,B\nChat history,history,A\n");
  REQUIRE(gold.features.size() == 3);
  CHECK(gold.entities == std::vector<std::string>{"A", "B"});
  std::vector<std::vector<std::string>> extracted{{"camera"}, {"sticker"}, {"emoji"}, {"history"}};
  auto m = match(gold, extracted);
  CHECK(m.gold_matched == std::vector<bool>{true, false, true});
  CHECK(m.true_positives() == 2);
  CHECK(m.false_positives() == 2);
  CHECK(m.true_positives() + m.unmatched_extracted.size() == m.extracted_total);

  auto none = match(gold, {});
  CHECK(none.pairs.empty());
  CHECK(none.unmatched_gold.size() == 3);
  CHECK(recall(none, gold) == 0.0);
}

TEST_CASE("match: overrides") {
  auto gold = load_gold_text("name,aliases,entities\nSticker,,A\nVoice Call,,A\n");
  std::vector<std::vector<std::string>> extracted{{"sticker"}, {"emoji"}, {"voice"}, {"voice", "call"}};
  auto m = match(gold, extracted, load_overrides_text("gold_name,extracted_term\nsticker,emoji\nVoice Call,voice\n"
                                                      "Voice Call,voice call\n"));
  CHECK(m.true_positives() == 3);
  CHECK(m.unmatched_extracted == std::vector<std::size_t>{0});  // override wins over auto-match
  CHECK_THROWS_AS(match(gold, extracted, {{"Nope", "emoji"}}), ConfigError);
  auto warn = match(gold, extracted, {{"Sticker", "smiley"}});
  CHECK(warn.warnings.size() == 1);
  CHECK_FALSE(warn.gold_matched[0]);
}

TEST_CASE("recall and precision examples") {
  auto gold = load_gold(fixture("feature_gold.csv"));
  auto m = match(gold, extracted_terms(), load_overrides(fixture("feature_overrides.csv")));
  CHECK(m.warnings.empty());
  CHECK(*recall(m, gold, "KIK") == doctest::Approx(0.75));
  CHECK(*recall(m, gold, "LINE") == doctest::Approx(8.0 / 11.0));
  CHECK(*recall(m, gold) == doctest::Approx(18.0 / 33.0));
  CHECK_FALSE(recall(m, gold, "Telegram"));

  auto all = load_gold_text("name,aliases,entities\ncamera,,A\n");
  CHECK(*recall(match(all, {{"camera"}}), all) == 1.0);

  CHECK(*precision(32, 19) == doctest::Approx(32.0 / 51.0));
  CHECK(*precision(0, 5) == 0.0);
  CHECK(*precision(7, 0) == 1.0);
  CHECK_FALSE(precision(0, 0));
}

TEST_CASE("adding an unmatched term never raises precision or changes recall") {
  auto gold = load_gold(fixture("feature_gold.csv"));
  auto overrides = load_overrides(fixture("feature_overrides.csv"));
  auto terms = extracted_terms();
  auto before = match(gold, terms, overrides);
  terms.push_back({"zzz", "unrelated"});
  auto after = match(gold, terms, overrides);
  CHECK(*recall(after, gold) == *recall(before, gold));
  CHECK(*precision(after.true_positives(), after.false_positives()) <=
        *precision(before.true_positives(), before.false_positives()));
  CHECK(render_eval(gold, terms, after) == render_eval(gold, terms, match(gold, terms, overrides)));
}

TEST_CASE("match prefers the tightest containing term") {
  auto gold = load_gold_text("name,aliases,entities\nVideo Call,,A\n");
  auto m = match(gold, {{"best", "video", "call"}, {"video", "call"}, {"call"}});
  REQUIRE(m.pairs.size() == 1);
  CHECK(m.pairs[0].extracted == 1);
}
