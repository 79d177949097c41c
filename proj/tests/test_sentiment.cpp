#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle/distance_score_oracle.hpp"
#include "revkano/sentiment.hpp"
#include "revkano/text_util.hpp"

using namespace revkano;

namespace {

std::vector<Token> toks(const std::vector<std::string>& words) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < words.size(); ++i) out.push_back({words[i], words[i], static_cast<int>(i)});
  return out;
}

Sentence sent(std::string entity, std::string review, std::vector<std::string> words) {
  return Sentence{std::move(entity), std::move(review), 0, toks(words)};
}

const OpinionLexicon& lex() {
  static const OpinionLexicon l = load_lexicon_text("great\ngood\nlove\nfast\n", "blurry\nbad\nslow\ncrash\n");
  return l;
}

std::vector<std::string> W(std::initializer_list<const char*> w) { return {w.begin(), w.end()}; }

}  // namespace

TEST_CASE("load_lexicon") {
  auto l = load_lexicon_text("good\ngreat\n", "bad\n");
  CHECK(l.positive.size() == 2);
  CHECK(l.negative.size() == 1);

  auto both = load_lexicon_text("funny\ngood\n", "funny\nbad\n");
  CHECK(both.polarity("funny") == 0);
  CHECK(both.positive.count("funny") == 0);
  CHECK(both.negative.count("funny") == 0);
  CHECK(both.conflicts == W({"funny"}));

  auto commented = load_lexicon_text("; header\n;another\n; third\ngood\nGreat\n\n", "bad\n");
  CHECK(commented.positive.size() == 2);
  CHECK(commented.polarity("great") == 1);
  CHECK(commented.polarity("bad") == -1);

  CHECK_THROWS_AS(load_lexicon("/nonexistent/pos.txt", "/nonexistent/neg.txt"), ConfigError);
}

TEST_CASE("score_sentence: hand examples") {
  auto t = toks(W({"great", "camera", "but", "blurry", "video"}));
  auto camera = score_sentence(t, W({"camera"}), lex());
  CHECK(camera.positive == 1.0);
  CHECK(camera.negative == 0.5);
  auto video = score_sentence(t, W({"video"}), lex());
  CHECK(video.positive == 0.25);
  CHECK(video.negative == 1.0);

  auto none = score_sentence(toks(W({"the", "app", "is"})), W({"app"}), lex());
  CHECK(none == AspectScore{});
  // Absent aspect: nothing to measure against.
  CHECK(score_sentence(t, W({"battery"}), lex()) == AspectScore{});
}

TEST_CASE("score_sentence: multi-word aspects and nearest occurrence") {
  auto t = toks(W({"great", "video", "call", "but", "slow"}));
  auto s = score_sentence(t, W({"video", "call"}), lex());
  CHECK(s.positive == 1.0);
  CHECK(s.negative == 0.5);

  // Sentiment words inside the span are skipped.
  auto inner = toks(W({"video", "great", "call"}));
  CHECK(score_sentence(inner, W({"video", "call"}), lex()) == AspectScore{});

  // Two occurrences: the nearer one decides.
  auto twice = toks(W({"camera", "x", "x", "x", "bad", "camera"}));
  CHECK(score_sentence(twice, W({"camera"}), lex()).negative == 1.0);
}

TEST_CASE("score_sentence matches the brute-force reference") {
  std::mt19937 rng(99);
  const std::vector<std::string> vocab{"great", "bad", "camera", "video", "call", "the", "slow", "good", "app"};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(1, 25);
  const std::vector<std::vector<std::string>> aspects{W({"camera"}), W({"video", "call"}), W({"call", "video"}),
                                                      W({"app", "camera", "video"})};
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::string> words(len(rng));
    for (auto& w : words) w = vocab[pick(rng)];
    std::vector<int> pol;
    for (const auto& w : words) pol.push_back(lex().polarity(w));
    for (const auto& a : aspects) {
      for (int gap : {0, 2}) {
        auto got = score_sentence(toks(words), a, lex(), gap);
        auto want = oracle::brute_score(words, pol, a, gap);
        CHECK(got.positive == doctest::Approx(want.positive).epsilon(1e-12));
        CHECK(got.negative == doctest::Approx(want.negative).epsilon(1e-12));
        auto npos = std::count(pol.begin(), pol.end(), 1);
        auto nneg = std::count(pol.begin(), pol.end(), -1);
        CHECK(got.positive <= static_cast<double>(npos));
        CHECK(got.negative <= static_cast<double>(nneg));
      }
    }
  }
}

TEST_CASE("DistanceHistogram") {
  DistanceHistogram h;
  CHECK(h.evaluate() == 0.0);
  h.add(1);
  h.add(2, 2);
  h.add(4);
  CHECK(h.evaluate() == 2.25);
  CHECK(h.total() == 4);
  DistanceHistogram g;
  g.add(4);
  g.merge(h);
  h.merge(DistanceHistogram{});
  DistanceHistogram k = h;
  k.add(4);
  CHECK(g == k);
}

TEST_CASE("score_corpus: single sentence and duplication") {
  std::vector<AspectTerm> terms{{W({"camera"}), 1}};
  std::vector<Sentence> one{sent("A", "r1", W({"great", "camera"}))};
  auto t1 = score_corpus(one, terms, {}, lex());
  CHECK(t1.term_scores[0] == AspectScore{1.0, 0.0});
  one.push_back(one[0]);
  auto t2 = score_corpus(one, terms, {}, lex());
  CHECK(t2.term_scores[0] == AspectScore{2.0, 0.0});
}

TEST_CASE("category totals add member scores") {
  AspectScore sticker{200, 50};
  AspectScore emoji{93.525, 18.054};
  auto total = sticker + emoji;
  CHECK(total.positive == doctest::Approx(293.525));
  CHECK(total.negative == doctest::Approx(68.054));

  std::vector<AspectTerm> terms{{W({"sticker"}), 1}, {W({"emoji"}), 1}};
  std::vector<AspectCategory> cats{{"stickers", "sticker, emoji", {W({"sticker"}), W({"emoji"})}}};
  std::vector<Sentence> s{sent("A", "1", W({"great", "sticker"})), sent("A", "2", W({"emoji", "x", "bad"})),
                          sent("B", "3", W({"good", "sticker", "and", "emoji", "slow"}))};
  auto table = score_corpus(s, terms, cats, lex());
  auto sum = table.term_scores[0] + table.term_scores[1];
  CHECK(table.category_scores[0].positive == doctest::Approx(sum.positive));
  CHECK(table.category_scores[0].negative == doctest::Approx(sum.negative));
  REQUIRE(table.entities == W({"A", "B"}));
  auto a = table.entity_category_scores[0][0];
  auto b = table.entity_category_scores[1][0];
  CHECK(a.positive + b.positive == doctest::Approx(table.category_scores[0].positive));
  CHECK(a.negative + b.negative == doctest::Approx(table.category_scores[0].negative));
}

TEST_CASE("normalize_per_entity") {
  auto n = normalize_per_entity({664.893, 224.012}, 10000);
  REQUIRE(n);
  CHECK(n->positive == doctest::Approx(0.0664893));
  CHECK(n->negative == doctest::Approx(0.0224012));
  CHECK(*normalize_per_entity({0, 0}, 17) == AspectScore{});
  CHECK_FALSE(normalize_per_entity({1, 1}, 0));
  auto once = normalize_per_entity({3.75, 1.5}, 7);
  auto twice = normalize_per_entity({7.5, 3.0}, 14);
  CHECK(*once == *twice);
}

TEST_CASE("additivity over partitions, serial equals parallel, duplication invariance") {
  std::mt19937 rng(5);
  const std::vector<std::string> vocab{"great", "bad", "camera", "video", "call", "the", "slow", "good", "app"};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  std::vector<Sentence> s;
  for (int i = 0; i < 400; ++i) {
    std::vector<std::string> w(len(rng));
    for (auto& x : w) x = vocab[pick(rng)];
    s.push_back(sent(std::string(1, static_cast<char>('A' + i % 3)), std::to_string(i / 2), w));
  }
  std::vector<AspectTerm> terms{{W({"camera"}), 0}, {W({"video", "call"}), 0}, {W({"app"}), 0}};
  std::vector<AspectCategory> cats{{"cam", "camera, app", {W({"camera"}), W({"app"})}},
                                   {"vc", "video call", {W({"video", "call"})}}};
  ScoreOptions serial;
  ScoreOptions par;
  par.jobs = 4;
  auto whole = score_corpus(s, terms, cats, lex(), serial);
  auto whole_par = score_corpus(s, terms, cats, lex(), par);
  CHECK(whole.term_scores == whole_par.term_scores);
  CHECK(whole.category_scores == whole_par.category_scores);
  CHECK(whole.entity_category_scores == whole_par.entity_category_scores);

  std::vector<Sentence> left(s.begin(), s.begin() + 150);
  std::vector<Sentence> right(s.begin() + 150, s.end());
  auto l = score_corpus(left, terms, cats, lex());
  auto r = score_corpus(right, terms, cats, lex());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    CHECK(whole.term_scores[t].positive == doctest::Approx(l.term_scores[t].positive + r.term_scores[t].positive));
    CHECK(whole.term_scores[t].negative == doctest::Approx(l.term_scores[t].negative + r.term_scores[t].negative));
  }

  // Duplicate entity B's sentences and review count.
  std::vector<Sentence> dup = s;
  for (const auto& x : s) {
    if (x.entity_id == "B") dup.push_back(x);
  }
  auto d = score_corpus(dup, terms, cats, lex(), par);
  auto b = *whole.entity_index("B");
  for (std::size_t c = 0; c < cats.size(); ++c) {
    auto n1 = normalize_per_entity(whole.entity_category_scores[b][c], 67);
    auto n2 = normalize_per_entity(d.entity_category_scores[b][c], 134);
    CHECK(n1->positive == n2->positive);
    CHECK(n1->negative == n2->negative);
  }
}

TEST_CASE("scores_to_jsonl is deterministic") {
  std::vector<AspectTerm> terms{{W({"camera"}), 1}};
  std::vector<Sentence> one{sent("A", "r1", W({"great", "camera"}))};
  auto a = scores_to_jsonl(score_corpus(one, terms, {}, lex()));
  CHECK(a == scores_to_jsonl(score_corpus(one, terms, {}, lex())));
  CHECK(a.find("\"kind\":\"term\"") != std::string::npos);
}
