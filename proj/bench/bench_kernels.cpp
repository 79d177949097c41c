#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <set>

#include "revkano/apriori.hpp"
#include "revkano/sentiment.hpp"

using namespace revkano;

namespace {

// Zipf-ish item frequencies so that a realistic share of pairs is frequent.
kernels::EncodedTransactions make_db(std::size_t rows, int vocab, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<double> weights;
  for (int i = 1; i <= vocab; ++i) weights.push_back(1.0 / i);
  std::discrete_distribution<int> item(weights.begin(), weights.end());
  std::uniform_int_distribution<int> width(1, 5);
  std::vector<Transaction> txs(rows);
  for (auto& t : txs) {
    std::set<std::string> row;
    for (int w = width(rng); w > 0; --w) row.insert("w" + std::to_string(item(rng)));
    t.items.assign(row.begin(), row.end());
  }
  return kernels::encode(txs);
}

std::vector<kernels::Itemset> pair_candidates(const kernels::EncodedTransactions& db) {
  std::vector<kernels::Itemset> singles;
  auto ids = static_cast<kernels::ItemId>(std::min<std::size_t>(db.vocabulary.size(), 150));
  for (kernels::ItemId i = 0; i < ids; ++i) singles.push_back({i});
  return kernels::generate_candidates(singles);
}

const kernels::EncodedTransactions& db() {
  static const auto d = make_db(20000, 1000, 11);
  return d;
}

const std::vector<kernels::Itemset>& candidates() {
  static const auto c = pair_candidates(db());
  return c;
}

void BM_SupportSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_support_serial(db(), candidates()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(db().rows.size()));
}
BENCHMARK(BM_SupportSerial)->Unit(benchmark::kMillisecond);

void BM_SupportOmp(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_support_omp(db(), candidates(), jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(db().rows.size()));
}
BENCHMARK(BM_SupportOmp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

struct ScoringFixture {
  std::vector<Sentence> sentences;
  OpinionLexicon lexicon;
  kernels::ScoringInput input;

  ScoringFixture() {
    lexicon = load_lexicon_text("great\ngood\nlove\nfast\nsmooth\n", "bad\nslow\ncrash\nbuggy\nhate\n");
    const std::vector<std::string> vocab{"great", "bad",  "camera", "video",  "call", "the", "slow", "good",
                                         "app",   "love", "crash",  "sticker", "is",  "and", "update", "it"};
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::uniform_int_distribution<int> len(3, 20);
    for (int s = 0; s < 100000; ++s) {
      Sentence sent{"e" + std::to_string(s % 5), std::to_string(s), 0, {}};
      for (int i = len(rng); i > 0; --i) {
        const auto& w = vocab[pick(rng)];
        sent.tokens.push_back({w, w, static_cast<int>(sent.tokens.size())});
      }
      sentences.push_back(std::move(sent));
    }
    input.sentences = &sentences;
    input.entity_count = 5;
    for (int s = 0; s < 100000; ++s) input.sentence_entity.push_back(static_cast<std::uint32_t>(s % 5));
    input.aspects = {{"camera"}, {"video", "call"}, {"sticker"}, {"update"}, {"app"}};
    input.lexicon = &lexicon;
  }
};

const ScoringFixture& scoring() {
  static const ScoringFixture f;
  return f;
}

void BM_ScoreSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::score_sentences_serial(scoring().input));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(scoring().sentences.size()));
}
BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);

void BM_ScoreOmp(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::score_sentences_omp(scoring().input, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(scoring().sentences.size()));
}
BENCHMARK(BM_ScoreOmp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
