#include <string>

#include "doctest.h"
#include "revkano/corpus.hpp"

using namespace revkano;

namespace {

std::vector<std::string> norms(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.norm);
  return out;
}

std::string strip_ws(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

TEST_CASE("ingest: empty input gives an empty corpus") {
  auto r = ingest_reviews_text("");
  CHECK(r.corpus.empty());
  CHECK(r.corpus.entity_count() == 0);
  CHECK(r.rejects.empty());
}

TEST_CASE("ingest: counts reviews per entity") {
  auto r = ingest_reviews_text(
      R"({"entity":"A","review_id":"1","text":"Great app."}
{"entity":"A","review_id":"2","text":"Bad update","rating":2}
{"entity":"B","review_id":"1","text":"ok","timestamp":"2016-01-01T00:00:00Z"}
)");
  CHECK(r.rejects.empty());
  CHECK(r.corpus.review_counts() == std::map<std::string, std::size_t>{{"A", 2}, {"B", 1}});
  CHECK(r.corpus.reviews()[1].rating == 2);
  CHECK(r.corpus.reviews()[2].timestamp == "2016-01-01T00:00:00Z");
}

TEST_CASE("ingest: malformed lines are rejected with line numbers, others kept") {
  auto r = ingest_reviews_text(
      R"({"entity":"A","review_id":"1","text":"fine"}
{"entity":"A","review_id":"2"}
not json
{"entity":"A","review_id":"1","text":"dup"}
{"entity":"A","review_id":"3","text":"   "}
{"entity":"A","review_id":"4","text":"x","rating":9}
{"entity":"B","review_id":"1","text":"same id, other entity"}
)");
  REQUIRE(r.rejects.size() == 5);
  CHECK(r.rejects[0].line == 2);
  CHECK(r.rejects[0].reason == "missing field text");
  CHECK(r.rejects[1].line == 3);
  CHECK(r.rejects[2].reason == "duplicate review_id");
  CHECK(r.rejects[3].reason == "empty text");
  CHECK(r.rejects[4].reason == "rating out of range");
  CHECK(r.corpus.reviews().size() == 2);
  CHECK(rejects_csv(r.rejects).rfind("line,reason\n2,missing field text\n", 0) == 0);
}

TEST_CASE("segment") {
  CHECK(segment("Great app. Love it!") == std::vector<std::string>{"Great app.", "Love it!"});
  CHECK(segment("Loveeeeeeeeeeeeeeeeeeeeeeeee it") == std::vector<std::string>{"Loveeeeeeeeeeeeeeeeeeeeeeeee it"});
  CHECK(segment("").empty());
  CHECK(segment("Why?!? Because\nsecond line") == std::vector<std::string>{"Why?!?", "Because", "second line"});
}

TEST_CASE("segment preserves every non-whitespace character") {
  for (std::string text : {"a. b! c? d", "I need whats app video call feature.if this feature is provided I will give u five stars",
                           "...leading dots", "no terminal", "multi\n\nline\r\n text!!!"}) {
    std::string joined;
    for (const auto& s : segment(text)) joined += s;
    CHECK(strip_ws(joined) == strip_ws(text));
  }
}

TEST_CASE("tokenize") {
  CHECK(norms(tokenize("I need video call feature.")) == std::vector<std::string>{"i", "need", "video", "call", "feature"});
  CHECK(norms(tokenize("Great!!!")) == std::vector<std::string>{"great"});
  CHECK(norms(tokenize("dp & status")) == std::vector<std::string>{"dp", "status"});
  CHECK(norms(tokenize("don't STOP \xF0\x9F\x98\x80 now")) == std::vector<std::string>{"don't", "stop", "now"});

  auto toks = tokenize("(hello) - world");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].surface == "(hello)");
  CHECK(toks[1].pos == 1);
}

TEST_CASE("elongation collapse is opt-in") {
  CHECK(norms(tokenize("Loveeeee it")) == std::vector<std::string>{"loveeeee", "it"});
  TokenizeOptions opts;
  opts.collapse_elongation = true;
  CHECK(norms(tokenize("Loveeeee it", opts)) == std::vector<std::string>{"lovee", "it"});
  CHECK(collapse_elongation("cool") == "cool");
}

TEST_CASE("build_sentences keeps positions and indices contiguous") {
  auto r = ingest_reviews_text(R"({"entity":"A","review_id":"1","text":"Nice! ❤❤. The chat works & fast."})");
  auto sentences = build_sentences(r.corpus);
  REQUIRE(sentences.size() == 2);  // the emoji-only sentence has no tokens
  CHECK(sentences[0].index == 0);
  CHECK(sentences[1].index == 1);
  for (const auto& s : sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) CHECK(s.tokens[i].pos == static_cast<int>(i));
  }
}

TEST_CASE("sentence serialization round trips and is deterministic") {
  auto r = ingest_reviews_text(
      "{\"entity\":\"A\",\"review_id\":\"1\",\"text\":\"Great app. Love the \\\"stickers\\\"!\"}\n"
      "{\"entity\":\"B\",\"review_id\":\"9\",\"text\":\"meh\"}\n");
  auto sentences = build_sentences(r.corpus);
  auto text = sentences_to_jsonl(sentences);
  CHECK(sentences_from_jsonl(text) == sentences);
  CHECK(sentences_to_jsonl(build_sentences(ingest_reviews_text(
            "{\"entity\":\"A\",\"review_id\":\"1\",\"text\":\"Great app. Love the \\\"stickers\\\"!\"}\n"
            "{\"entity\":\"B\",\"review_id\":\"9\",\"text\":\"meh\"}\n")
                                             .corpus)) == text);
  auto counts = r.corpus.review_counts();
  CHECK(review_counts_from_json(review_counts_to_json(counts)) == counts);
}
