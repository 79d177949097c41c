#include "revkano/sentiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "json.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

int OpinionLexicon::polarity(std::string_view norm) const {
  std::string key(norm);
  if (positive.count(key)) return 1;
  if (negative.count(key)) return -1;
  return 0;
}

namespace {

std::unordered_set<std::string> parse_word_list(std::string_view text) {
  std::unordered_set<std::string> words;
  for (const auto& line : split(text, '\n')) {
    auto t = trim(line);
    if (t.empty() || t[0] == ';') continue;
    words.insert(to_lower(t));
  }
  return words;
}

std::string read_config_file(const std::filesystem::path& path) {
  try {
    return read_file(path);
  } catch (const InputError& e) {
    throw ConfigError(std::string("lexicon: ") + e.what());
  }
}

// Calls emit(polarity, distance) for every sentiment token outside the
// aspect's occurrence spans. No-op when the aspect does not occur.
template <typename Emit>
void sentence_contributions(std::span<const Token> tokens, std::span<const std::string> aspect,
                            const OpinionLexicon& lexicon, int max_gap, Emit&& emit) {
  auto occurrences = find_occurrences(tokens, aspect, max_gap);
  if (occurrences.empty()) return;
  const int n = static_cast<int>(tokens.size());
  std::vector<int> anchor;
  std::vector<bool> inside(n, false);
  for (const auto& occ : occurrences) {
    anchor.insert(anchor.end(), occ.begin(), occ.end());
    for (int p = occ.front(); p <= occ.back(); ++p) inside[p] = true;
  }
  std::sort(anchor.begin(), anchor.end());
  for (int j = 0; j < n; ++j) {
    if (inside[j]) continue;
    int pol = lexicon.polarity(tokens[j].norm);
    if (pol == 0) continue;
    auto it = std::lower_bound(anchor.begin(), anchor.end(), j);
    int dist = n;
    if (it != anchor.end()) dist = std::min(dist, *it - j);
    if (it != anchor.begin()) dist = std::min(dist, j - *(it - 1));
    emit(pol, static_cast<std::uint32_t>(std::max(dist, 1)));
  }
}

}  // namespace

OpinionLexicon load_lexicon_text(std::string_view positive, std::string_view negative) {
  OpinionLexicon lex;
  lex.positive = parse_word_list(positive);
  lex.negative = parse_word_list(negative);
  for (const auto& w : lex.positive) {
    if (lex.negative.count(w)) lex.conflicts.push_back(w);
  }
  std::sort(lex.conflicts.begin(), lex.conflicts.end());
  for (const auto& w : lex.conflicts) {
    lex.positive.erase(w);
    lex.negative.erase(w);
  }
  return lex;
}

OpinionLexicon load_lexicon(const std::filesystem::path& positive_path, const std::filesystem::path& negative_path) {
  return load_lexicon_text(read_config_file(positive_path), read_config_file(negative_path));
}

OpinionLexicon load_lexicon_dir(const std::filesystem::path& dir) {
  return load_lexicon(dir / "positive-words.txt", dir / "negative-words.txt");
}

std::vector<SentimentMatch> find_sentiment_words(std::span<const Token> tokens, const OpinionLexicon& lexicon) {
  std::vector<SentimentMatch> out;
  for (const auto& t : tokens) {
    if (int p = lexicon.polarity(t.norm)) out.push_back({t.norm, p, t.pos});
  }
  return out;
}

AspectScore score_sentence(std::span<const Token> tokens, std::span<const std::string> aspect,
                           const OpinionLexicon& lexicon, int max_gap) {
  AspectScore s;
  sentence_contributions(tokens, aspect, lexicon, max_gap, [&](int pol, std::uint32_t d) {
    (pol > 0 ? s.positive : s.negative) += 1.0 / static_cast<double>(d);
  });
  return s;
}

void DistanceHistogram::add(std::uint32_t distance, std::uint64_t n) {
  if (counts_.size() <= distance) counts_.resize(distance + 1, 0);
  counts_[distance] += n;
}

void DistanceHistogram::merge(const DistanceHistogram& other) {
  if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t d = 0; d < other.counts_.size(); ++d) counts_[d] += other.counts_[d];
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

double DistanceHistogram::evaluate() const {
  double sum = 0.0;
  for (std::size_t d = 1; d < counts_.size(); ++d) {
    if (counts_[d]) sum += static_cast<double>(counts_[d]) / static_cast<double>(d);
  }
  return sum;
}

std::uint64_t DistanceHistogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::optional<std::size_t> ScoreTable::entity_index(std::string_view entity) const {
  auto it = std::lower_bound(entities.begin(), entities.end(), entity);
  if (it == entities.end() || *it != entity) return std::nullopt;
  return static_cast<std::size_t>(it - entities.begin());
}

namespace kernels {

namespace {

using FirstWordIndex = std::unordered_map<std::string, std::vector<std::uint32_t>>;

FirstWordIndex first_word_index(const std::vector<std::vector<std::string>>& aspects) {
  FirstWordIndex idx;
  for (std::uint32_t a = 0; a < aspects.size(); ++a) {
    if (!aspects[a].empty()) idx[aspects[a].front()].push_back(a);
  }
  return idx;
}

void score_one(const ScoringInput& in, const FirstWordIndex& idx, std::size_t s, HistogramGrid& grid,
               std::vector<std::uint32_t>& scratch) {
  const auto& tokens = (*in.sentences)[s].tokens;
  scratch.clear();
  for (const auto& tok : tokens) {
    if (auto it = idx.find(tok.norm); it != idx.end()) scratch.insert(scratch.end(), it->second.begin(), it->second.end());
  }
  std::sort(scratch.begin(), scratch.end());
  scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
  const std::size_t entity = in.sentence_entity[s];
  for (auto a : scratch) {
    auto& cell = grid[a * in.entity_count + entity];
    sentence_contributions(tokens, in.aspects[a], *in.lexicon, in.max_gap, [&](int pol, std::uint32_t d) {
      (pol > 0 ? cell.positive : cell.negative).add(d);
    });
  }
}

}  // namespace

HistogramGrid score_sentences_serial(const ScoringInput& in) {
  HistogramGrid grid(in.aspects.size() * in.entity_count);
  auto idx = first_word_index(in.aspects);
  std::vector<std::uint32_t> scratch;
  for (std::size_t s = 0; s < in.sentences->size(); ++s) score_one(in, idx, s, grid, scratch);
  return grid;
}

HistogramGrid score_sentences_omp(const ScoringInput& in, int jobs) {
  const std::size_t cells = in.aspects.size() * in.entity_count;
  HistogramGrid grid(cells);
  auto idx = first_word_index(in.aspects);
  const long n = static_cast<long>(in.sentences->size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    HistogramGrid local(cells);
    std::vector<std::uint32_t> scratch;
#pragma omp for schedule(dynamic, 128) nowait
    for (long s = 0; s < n; ++s) score_one(in, idx, static_cast<std::size_t>(s), local, scratch);
#pragma omp critical
    for (std::size_t c = 0; c < cells; ++c) grid[c].merge(local[c]);
  }
  return grid;
}

}  // namespace kernels

ScoreTable score_corpus(const std::vector<Sentence>& sentences, const std::vector<AspectTerm>& terms,
                        const std::vector<AspectCategory>& categories, const OpinionLexicon& lexicon,
                        const ScoreOptions& opts) {
  ScoreTable table;
  table.terms = terms;
  table.categories = categories;
  {
    std::map<std::string, int> seen;
    for (const auto& s : sentences) seen[s.entity_id];
    for (const auto& [e, _] : seen) table.entities.push_back(e);
  }

  // Scored vocabulary: every term plus every category member.
  std::map<std::vector<std::string>, std::uint32_t> aspect_ids;
  kernels::ScoringInput in;
  auto intern = [&](const std::vector<std::string>& words) {
    auto [it, inserted] = aspect_ids.emplace(words, static_cast<std::uint32_t>(in.aspects.size()));
    if (inserted) in.aspects.push_back(words);
    return it->second;
  };
  for (const auto& t : terms) intern(t.words);
  for (const auto& c : categories) {
    for (const auto& m : c.members) intern(m);
  }

  in.sentences = &sentences;
  in.entity_count = table.entities.size();
  in.lexicon = &lexicon;
  in.max_gap = opts.max_gap;
  in.sentence_entity.reserve(sentences.size());
  for (const auto& s : sentences) in.sentence_entity.push_back(static_cast<std::uint32_t>(*table.entity_index(s.entity_id)));

  auto grid = opts.jobs == 1 ? kernels::score_sentences_serial(in) : kernels::score_sentences_omp(in, opts.jobs);
  const std::size_t E = in.entity_count;

  auto aspect_total = [&](std::uint32_t a) {
    PolarityHistogram h;
    for (std::size_t e = 0; e < E; ++e) h.merge(grid[a * E + e]);
    return h;
  };

  table.entity_term_scores.assign(E, {});
  for (const auto& t : terms) {
    auto a = aspect_ids.at(t.words);
    table.term_scores.push_back(aspect_total(a).score());
    for (std::size_t e = 0; e < E; ++e) table.entity_term_scores[e].push_back(grid[a * E + e].score());
  }
  table.entity_category_scores.assign(E, {});
  for (const auto& c : categories) {
    PolarityHistogram total;
    std::vector<PolarityHistogram> per_entity(E);
    for (const auto& m : c.members) {
      auto a = aspect_ids.at(m);
      for (std::size_t e = 0; e < E; ++e) {
        per_entity[e].merge(grid[a * E + e]);
        total.merge(grid[a * E + e]);
      }
    }
    table.category_scores.push_back(total.score());
    for (std::size_t e = 0; e < E; ++e) table.entity_category_scores[e].push_back(per_entity[e].score());
  }
  return table;
}

std::optional<AspectScore> normalize_per_entity(const AspectScore& score, std::size_t review_count) {
  if (review_count == 0) return std::nullopt;
  const double n = static_cast<double>(review_count);
  return AspectScore{score.positive / n, score.negative / n};
}

std::string scores_to_jsonl(const ScoreTable& table) {
  using nlohmann::json;
  std::string out;
  for (std::size_t t = 0; t < table.terms.size(); ++t) {
    out += json{{"kind", "term"},
                {"subject", table.terms[t].label()},
                {"positive", table.term_scores[t].positive},
                {"negative", table.term_scores[t].negative}}
               .dump() +
           "\n";
  }
  for (std::size_t c = 0; c < table.categories.size(); ++c) {
    out += json{{"kind", "category"},
                {"subject", table.categories[c].category_id},
                {"positive", table.category_scores[c].positive},
                {"negative", table.category_scores[c].negative}}
               .dump() +
           "\n";
  }
  for (std::size_t e = 0; e < table.entities.size(); ++e) {
    for (std::size_t c = 0; c < table.categories.size(); ++c) {
      out += json{{"kind", "entity_category"},
                  {"entity", table.entities[e]},
                  {"subject", table.categories[c].category_id},
                  {"positive", table.entity_category_scores[e][c].positive},
                  {"negative", table.entity_category_scores[e][c].negative}}
                 .dump() +
             "\n";
    }
  }
  return out;
}

}  // namespace revkano
