#include "revkano/miner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

using nlohmann::json;

std::string AspectTerm::label() const { return join(words, " "); }

std::vector<Transaction> build_transactions(const std::vector<NounPhrase>& phrases) {
  std::vector<Transaction> out;
  out.reserve(phrases.size());
  for (const auto& np : phrases) {
    std::set<std::string> items;
    for (std::size_t i = 0; i < np.terms.size(); ++i) {
      PosTag t = i < np.term_tags.size() ? np.term_tags[i] : PosTag::NOUN;
      if (t == PosTag::DET || t == PosTag::PREP) continue;
      items.insert(np.terms[i]);
    }
    if (items.empty()) continue;
    out.push_back({std::vector<std::string>(items.begin(), items.end())});
  }
  return out;
}

SentenceIndex::SentenceIndex(const std::vector<Sentence>& sentences) {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (const auto& tok : sentences[s].tokens) {
      auto& list = postings_[tok.norm];
      if (list.empty() || list.back() != s) list.push_back(s);
    }
  }
}

const std::vector<std::size_t>* SentenceIndex::postings(std::string_view word) const {
  auto it = postings_.find(std::string(word));
  return it == postings_.end() ? nullptr : &it->second;
}

std::size_t SentenceIndex::count(std::string_view word) const {
  const auto* p = postings(word);
  return p ? p->size() : 0;
}

std::vector<std::size_t> SentenceIndex::sentences_with_all(std::span<const std::string> words) const {
  if (words.empty()) return {};
  const auto* first = postings(words[0]);
  if (!first) return {};
  std::vector<std::size_t> acc = *first;
  for (std::size_t i = 1; i < words.size() && !acc.empty(); ++i) {
    const auto* p = postings(words[i]);
    if (!p) return {};
    std::vector<std::size_t> next;
    std::set_intersection(acc.begin(), acc.end(), p->begin(), p->end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

std::size_t SentenceIndex::count_all(std::span<const std::string> words) const {
  return sentences_with_all(words).size();
}

namespace {

bool extend_match(std::span<const Token> tokens, std::span<const std::string> words, int max_gap,
                  std::vector<int>& positions) {
  const std::size_t idx = positions.size();
  if (idx == words.size()) return true;
  const int prev = positions.back();
  const int limit = std::min<int>(static_cast<int>(tokens.size()) - 1, prev + max_gap + 1);
  for (int j = prev + 1; j <= limit; ++j) {
    if (tokens[j].norm != words[idx]) continue;
    positions.push_back(j);
    if (extend_match(tokens, words, max_gap, positions)) return true;
    positions.pop_back();
  }
  return false;
}

// Any-order variant: each remaining candidate word used once.
bool extend_unordered(std::span<const Token> tokens, const std::vector<std::string>& words, int max_gap,
                      std::vector<bool>& used, std::vector<int>& positions) {
  if (positions.size() == words.size()) return true;
  const int prev = positions.back();
  const int limit = std::min<int>(static_cast<int>(tokens.size()) - 1, prev + max_gap + 1);
  for (int j = prev + 1; j <= limit; ++j) {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (used[w] || tokens[j].norm != words[w]) continue;
      used[w] = true;
      positions.push_back(j);
      if (extend_unordered(tokens, words, max_gap, used, positions)) return true;
      positions.pop_back();
      used[w] = false;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> find_occurrences(std::span<const Token> tokens, std::span<const std::string> words,
                                               int max_gap) {
  std::vector<std::vector<int>> out;
  if (words.empty()) return out;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    if (tokens[i].norm == words[0]) {
      std::vector<int> positions{i};
      if (extend_match(tokens, words, max_gap, positions)) {
        i = positions.back() + 1;
        out.push_back(std::move(positions));
        continue;
      }
    }
    ++i;
  }
  return out;
}

std::vector<AspectTerm> prune_singletons(const std::vector<Rule>& rules, const SentenceIndex& index,
                                         std::size_t threshold, const std::vector<std::string>& extra_candidates) {
  // word -> supersets (rule itemsets containing it)
  std::map<std::string, std::set<std::vector<std::string>>> supersets;
  for (const auto& r : rules) {
    std::vector<std::string> all = r.antecedent;
    all.insert(all.end(), r.consequent.begin(), r.consequent.end());
    std::sort(all.begin(), all.end());
    for (const auto& w : all) supersets[w].insert(all);
  }
  for (const auto& w : extra_candidates) supersets.try_emplace(w);

  std::vector<AspectTerm> out;
  for (const auto& [word, sets] : supersets) {
    const auto own = static_cast<long long>(index.count(word));
    long long largest = 0;
    for (const auto& s : sets) largest = std::max<long long>(largest, static_cast<long long>(index.count_all(s)));
    if (own - largest > static_cast<long long>(threshold)) {
      out.push_back({{word}, static_cast<std::size_t>(own)});
    }
  }
  return out;
}

std::vector<std::vector<std::string>> multiword_candidates(const std::vector<Rule>& rules, std::size_t max_size) {
  std::set<std::vector<std::string>> sets;
  for (const auto& r : rules) {
    std::vector<std::string> all = r.antecedent;
    all.insert(all.end(), r.consequent.begin(), r.consequent.end());
    std::sort(all.begin(), all.end());
    if (all.size() >= 2 && all.size() <= max_size) sets.insert(std::move(all));
  }
  return {sets.begin(), sets.end()};
}

std::vector<AspectTerm> validate_multiword(const std::vector<std::vector<std::string>>& candidates,
                                           const std::vector<Sentence>& sentences,
                                           const std::vector<NounPhrase>& phrases, const MultiwordOptions& opts) {
  std::unordered_map<std::size_t, std::vector<const NounPhrase*>> coalesced;
  for (const auto& np : phrases) {
    if (np.coalesced) coalesced[np.sentence].push_back(&np);
  }
  SentenceIndex index(sentences);

  std::map<std::vector<std::string>, std::size_t> found;
  for (const auto& cand : candidates) {
    if (cand.size() < 2 || cand.size() > opts.max_candidate_size) continue;
    std::map<std::vector<std::string>, std::size_t> counts;
    for (std::size_t s : index.sentences_with_all(cand)) {
      const auto& tokens = sentences[s].tokens;
      std::set<std::vector<std::string>> seen;
      const int n = static_cast<int>(tokens.size());
      int i = 0;
      while (i < n) {
        auto start = std::find(cand.begin(), cand.end(), tokens[i].norm);
        if (start == cand.end()) {
          ++i;
          continue;
        }
        std::vector<bool> used(cand.size(), false);
        used[start - cand.begin()] = true;
        std::vector<int> positions{i};
        if (!extend_unordered(tokens, cand, opts.max_gap, used, positions)) {
          ++i;
          continue;
        }
        const int first = positions.front();
        const int last = positions.back();
        std::vector<std::string> words;
        if (auto it = coalesced.find(s); it != coalesced.end()) {
          for (const NounPhrase* np : it->second) {
            if (np->start <= first && last < np->end && first < np->prep_pos && np->prep_pos < last) {
              for (std::size_t t = 0; t < np->terms.size(); ++t) {
                int p = np->term_positions[t];
                if (p >= first && p <= last) words.push_back(np->terms[t]);
              }
              break;
            }
          }
        }
        if (words.empty()) {
          for (int p : positions) words.push_back(tokens[p].norm);
        }
        seen.insert(std::move(words));
        i = last + 1;
      }
      for (const auto& w : seen) ++counts[w];
    }
    for (const auto& [words, c] : counts) {
      if (c < opts.min_sentences) continue;
      auto& slot = found[words];
      slot = std::max(slot, c);
    }
  }
  std::vector<AspectTerm> out;
  for (const auto& [words, c] : found) out.push_back({words, c});
  return out;
}

MiningResult mine_aspects(const std::vector<Sentence>& sentences, const std::vector<NounPhrase>& phrases,
                          const MinerConfig& config) {
  MiningResult result;
  result.transactions = build_transactions(phrases);
  MiningOptions mopts;
  mopts.min_support = config.min_support;
  mopts.jobs = config.jobs;
  result.frequent = mine_frequent(result.transactions, mopts);
  result.rules = generate_rules(result.frequent, config.min_confidence);

  SentenceIndex index(sentences);
  std::vector<std::string> extra;
  if (config.include_frequent_singletons) {
    for (const auto& s : result.frequent.sets()) {
      if (s.items.size() == 1) extra.push_back(s.items[0]);
    }
  }
  auto singles = prune_singletons(result.rules, index, config.prune_threshold, extra);
  MultiwordOptions wopts;
  wopts.max_gap = config.max_gap;
  wopts.min_sentences = config.min_sentences;
  auto multi = validate_multiword(multiword_candidates(result.rules, wopts.max_candidate_size), sentences, phrases,
                                  wopts);

  std::map<std::vector<std::string>, std::size_t> merged;
  for (const auto& t : singles) merged[t.words] = t.occurrence_count;
  for (const auto& t : multi) merged.try_emplace(t.words, t.occurrence_count);
  for (const auto& [words, c] : merged) result.terms.push_back({words, c});
  return result;
}

namespace {

std::vector<std::string> member_words(const json& m) {
  std::vector<std::string> words;
  if (m.is_string()) {
    for (auto& w : split(to_lower(trim(m.get<std::string>())), ' ')) {
      if (!w.empty()) words.push_back(w);
    }
  } else if (m.is_array()) {
    for (const auto& w : m) {
      if (!w.is_string()) throw ConfigError("category member words must be strings");
      auto norm = to_lower(trim(w.get<std::string>()));
      if (!norm.empty()) words.push_back(norm);
    }
  } else {
    throw ConfigError("category member must be an array of words");
  }
  if (words.empty()) throw ConfigError("empty category member");
  return words;
}

}  // namespace

CategoryLoad load_categories_text(std::string_view json_text, const std::vector<AspectTerm>& mined) {
  CategoryLoad load;
  json doc;
  if (trim(json_text).empty()) {
    doc = json::array();
  } else {
    try {
      doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("categories file: ") + e.what());
    }
  }
  if (!doc.is_array()) throw ConfigError("categories file must be a JSON array");

  std::set<std::vector<std::string>> mined_set;
  for (const auto& t : mined) mined_set.insert(t.words);
  std::map<std::vector<std::string>, std::string> owner;
  std::set<std::string> ids;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("category_id") || !entry.contains("members")) {
      throw ConfigError("category entries need category_id and members");
    }
    AspectCategory cat;
    cat.category_id = entry["category_id"].get<std::string>();
    cat.label = entry.value("label", cat.category_id);
    if (!ids.insert(cat.category_id).second) throw ConfigError("duplicate category_id " + cat.category_id);
    for (const auto& m : entry["members"]) {
      auto words = member_words(m);
      auto [it, inserted] = owner.emplace(words, cat.category_id);
      if (!inserted) {
        throw ConfigError("member '" + join(words, " ") + "' is in both " + it->second + " and " + cat.category_id);
      }
      if (!mined_set.count(words)) {
        load.warnings.push_back("member '" + join(words, " ") + "' of " + cat.category_id + " is not a mined aspect term");
      }
      cat.members.push_back(std::move(words));
    }
    if (cat.members.empty()) throw ConfigError("category " + cat.category_id + " has no members");
    load.categories.push_back(std::move(cat));
  }
  std::vector<std::string> missing;
  for (const auto& t : mined) {
    if (!owner.count(t.words)) {
      load.uncategorized.push_back(t);
      missing.push_back(t.label());
    }
  }
  if (!missing.empty()) load.warnings.push_back("uncategorized aspect terms: " + join(missing, ", "));
  return load;
}

CategoryLoad load_categories(const std::filesystem::path& path, const std::vector<AspectTerm>& mined) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  return load_categories_text(text, mined);
}

std::vector<AspectCategory> with_singleton_categories(const CategoryLoad& load) {
  auto out = load.categories;
  std::set<std::string> ids;
  for (const auto& c : out) ids.insert(c.category_id);
  for (const auto& t : load.uncategorized) {
    std::string id = join(t.words, "_");
    while (ids.count(id)) id += "_";
    ids.insert(id);
    out.push_back({id, t.label(), {t.words}});
  }
  return out;
}

std::string categories_to_json(const std::vector<AspectCategory>& categories) {
  json doc = json::array();
  for (const auto& c : categories) {
    doc.push_back({{"category_id", c.category_id}, {"label", c.label}, {"members", c.members}});
  }
  return doc.dump(2) + "\n";
}

std::string transactions_to_jsonl(const std::vector<Transaction>& transactions) {
  std::string out;
  for (const auto& t : transactions) out += json(t.items).dump() + "\n";
  return out;
}

std::string itemsets_to_jsonl(const FrequentItemsets& frequent) {
  std::string out;
  for (const auto& s : frequent.sets()) {
    out += json{{"items", s.items}, {"count", s.support_count}, {"support", s.support}}.dump() + "\n";
  }
  return out;
}

std::string rules_to_jsonl(const std::vector<Rule>& rules) {
  std::string out;
  for (const auto& r : rules) {
    out += json{{"lhs", r.antecedent},
                {"rhs", r.consequent},
                {"count", r.support_count},
                {"support", r.support},
                {"confidence", r.confidence}}
               .dump() +
           "\n";
  }
  return out;
}

std::string aspect_terms_to_jsonl(const std::vector<AspectTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += json{{"words", t.words}, {"occurrences", t.occurrence_count}}.dump() + "\n";
  return out;
}

std::vector<AspectTerm> aspect_terms_from_jsonl(std::string_view text) {
  std::vector<AspectTerm> out;
  for (const auto& line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    auto j = json::parse(line);
    out.push_back({j.at("words").get<std::vector<std::string>>(), j.value("occurrences", std::size_t{0})});
  }
  return out;
}

}  // namespace revkano
