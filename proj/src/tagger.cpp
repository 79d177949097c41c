#include "revkano/tagger.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 9> kTagNames{{
    {PosTag::NOUN, "NOUN"},
    {PosTag::PROPER_NOUN, "PROPER_NOUN"},
    {PosTag::ADJ, "ADJ"},
    {PosTag::DET, "DET"},
    {PosTag::VERB, "VERB"},
    {PosTag::ADV, "ADV"},
    {PosTag::PREP, "PREP"},
    {PosTag::PRON, "PRON"},
    {PosTag::OTHER, "OTHER"},
}};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool has_digit(std::string_view s) {
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

bool has_alpha(std::string_view s) {
  for (char c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(PosTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& [t, n] : kTagNames) {
    if (n == upper) return t;
  }
  return std::nullopt;
}

std::vector<PosTag> Tagger::tag(std::span<const Token> sentence) const {
  std::vector<PosTag> out;
  out.reserve(sentence.size());
  for (const auto& tok : sentence) out.push_back(tag_word(tok.norm));
  return out;
}

LexiconTagger::LexiconTagger() {
  for (const auto& [tag, words] : detail::embedded_tag_dictionary()) {
    std::istringstream in{std::string(words)};
    std::string w;
    while (in >> w) dict_[w] = tag;
  }
}

void LexiconTagger::set(std::string word, PosTag tag) { dict_[to_lower(word)] = tag; }

void LexiconTagger::load_overrides_text(std::string_view text) {
  std::size_t line_no = 0;
  for (const auto& line : split(text, '\n')) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, '\t');
    if (fields.size() != 2) {
      throw ConfigError("tag lexicon line " + std::to_string(line_no) + ": expected word<TAB>tag");
    }
    auto tag = parse_pos_tag(trim(fields[1]));
    if (!tag) throw ConfigError("tag lexicon line " + std::to_string(line_no) + ": unknown tag " + fields[1]);
    set(trim(fields[0]), *tag);
  }
}

void LexiconTagger::load_overrides(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  load_overrides_text(text);
}

std::optional<PosTag> LexiconTagger::lookup(std::string_view word) const {
  auto it = dict_.find(std::string(word));
  if (it == dict_.end()) return std::nullopt;
  return it->second;
}

PosTag LexiconTagger::tag_word(std::string_view norm) const {
  if (auto t = lookup(norm)) return *t;
  if (!has_alpha(norm) || (has_digit(norm) && norm.size() <= 2)) return PosTag::OTHER;
  if (norm.size() > 4 && ends_with(norm, "ing")) return PosTag::VERB;
  if (norm.size() > 3 && ends_with(norm, "ly")) return PosTag::ADV;
  if (norm.size() > 2 && ends_with(norm, "s") && !ends_with(norm, "ss")) {
    auto stem = norm.substr(0, norm.size() - 1);
    if (auto t = lookup(stem); t && *t == PosTag::VERB) return PosTag::VERB;
    return PosTag::NOUN;
  }
  return PosTag::NOUN;
}

namespace {

struct Span {
  int det = -1;  // position of leading DET, if any
  int start = 0;
  int end = 0;
};

// Longest NP starting exactly at `i`, or nullopt.
std::optional<Span> match_np(std::span<const PosTag> tags, int i) {
  const int n = static_cast<int>(tags.size());
  Span s;
  s.start = i;
  int j = i;
  if (j < n && tags[j] == PosTag::DET) s.det = j++;
  while (j < n && tags[j] == PosTag::ADJ) ++j;
  int nouns_start = j;
  while (j < n && is_noun(tags[j])) ++j;
  if (j == nouns_start) return std::nullopt;
  s.end = j;
  return s;
}

}  // namespace

std::vector<NounPhrase> chunk(std::span<const Token> tokens, std::span<const PosTag> tags,
                              std::size_t sentence_index, const ChunkOptions& opts) {
  std::vector<NounPhrase> out;
  const int n = static_cast<int>(std::min(tokens.size(), tags.size()));
  auto append_terms = [&](NounPhrase& np, int from, int to) {
    for (int k = from; k < to; ++k) {
      if (tags[k] == PosTag::DET) continue;
      np.terms.push_back(tokens[k].norm);
      np.term_tags.push_back(tags[k]);
      np.term_positions.push_back(k);
    }
  };
  int i = 0;
  while (i < n) {
    auto first = match_np(tags.first(n), i);
    if (!first) {
      ++i;
      continue;
    }
    NounPhrase np;
    np.sentence = sentence_index;
    np.start = first->start;
    np.end = first->end;
    append_terms(np, first->start, first->end);
    if (opts.coalesce_prepositions && np.end + 1 < n && tags[np.end] == PosTag::PREP) {
      if (auto second = match_np(tags.first(n), np.end + 1)) {
        np.prep_pos = np.end;
        np.coalesced = true;
        append_terms(np, np.end, second->end);
        np.end = second->end;
      }
    }
    i = np.end;
    out.push_back(std::move(np));
  }
  return out;
}

std::vector<NounPhrase> extract_noun_phrases(const std::vector<Sentence>& sentences, const Tagger& tagger,
                                             const ChunkOptions& opts, int jobs) {
  const long n = static_cast<long>(sentences.size());
  std::vector<std::vector<NounPhrase>> per_sentence(sentences.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs > 0 ? jobs : 1) if (jobs != 1)
  for (long s = 0; s < n; ++s) {
    const auto& tokens = sentences[s].tokens;
    auto tags = tagger.tag(tokens);
    per_sentence[s] = chunk(tokens, tags, static_cast<std::size_t>(s), opts);
  }
  std::vector<NounPhrase> out;
  for (auto& v : per_sentence) {
    for (auto& np : v) out.push_back(std::move(np));
  }
  return out;
}

std::string noun_phrases_to_jsonl(const std::vector<NounPhrase>& phrases) {
  std::string out;
  for (const auto& np : phrases) {
    nlohmann::json tags = nlohmann::json::array();
    for (auto t : np.term_tags) tags.push_back(std::string(to_string(t)));
    nlohmann::json j = {{"sentence", np.sentence}, {"span", {np.start, np.end}}, {"terms", np.terms},
                        {"tags", tags}, {"positions", np.term_positions}};
    if (np.coalesced) j["prep_pos"] = np.prep_pos;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<NounPhrase> noun_phrases_from_jsonl(std::string_view text) {
  std::vector<NounPhrase> out;
  for (const auto& line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    auto j = nlohmann::json::parse(line);
    NounPhrase np;
    np.sentence = j.at("sentence").get<std::size_t>();
    np.start = j.at("span").at(0).get<int>();
    np.end = j.at("span").at(1).get<int>();
    np.terms = j.at("terms").get<std::vector<std::string>>();
    for (const auto& t : j.at("tags")) np.term_tags.push_back(parse_pos_tag(t.get<std::string>()).value_or(PosTag::OTHER));
    np.term_positions = j.at("positions").get<std::vector<int>>();
    if (j.contains("prep_pos")) {
      np.coalesced = true;
      np.prep_pos = j["prep_pos"].get<int>();
    }
    out.push_back(std::move(np));
  }
  return out;
}

}  // namespace revkano
