#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revkano/corpus.hpp"

namespace revkano {

enum class PosTag { NOUN, PROPER_NOUN, ADJ, DET, VERB, ADV, PREP, PRON, OTHER };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

inline bool is_noun(PosTag t) { return t == PosTag::NOUN || t == PosTag::PROPER_NOUN; }

/// Word-level tagger interface; implementations must be pure and thread-safe.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual PosTag tag_word(std::string_view norm) const = 0;

  std::vector<PosTag> tag(std::span<const Token> sentence) const;
};

/// Dictionary tagger: embedded word list, optional overrides, suffix
/// heuristics, NOUN for anything unknown.
class LexiconTagger : public Tagger {
 public:
  LexiconTagger();

  // Merges `word<TAB>tag` lines over the current dictionary.
  void load_overrides(const std::filesystem::path& path);
  void load_overrides_text(std::string_view text);
  void set(std::string word, PosTag tag);

  PosTag tag_word(std::string_view norm) const override;
  std::size_t dictionary_size() const { return dict_.size(); }

 private:
  std::optional<PosTag> lookup(std::string_view word) const;
  std::unordered_map<std::string, PosTag> dict_;
};

struct NounPhrase {
  std::size_t sentence = 0;  // index into the sentence list
  int start = 0;             // token span [start, end)
  int end = 0;
  std::vector<std::string> terms;  // content norms, DET excluded
  std::vector<PosTag> term_tags;   // parallel to terms
  std::vector<int> term_positions; // parallel to terms
  bool coalesced = false;          // merged across a preposition
  int prep_pos = -1;               // token position of that preposition

  bool operator==(const NounPhrase&) const = default;
};

struct ChunkOptions {
  bool coalesce_prepositions = true;
};

// NP := DET? ADJ* (NOUN|PROPER_NOUN)+, maximal, left to right; with coalescing,
// NP PREP NP merges into one phrase.
std::vector<NounPhrase> chunk(std::span<const Token> tokens, std::span<const PosTag> tags,
                              std::size_t sentence_index = 0, const ChunkOptions& opts = {});

// Tags and chunks every sentence (parallel over sentences when jobs != 1).
std::vector<NounPhrase> extract_noun_phrases(const std::vector<Sentence>& sentences, const Tagger& tagger,
                                             const ChunkOptions& opts = {}, int jobs = 1);

std::string noun_phrases_to_jsonl(const std::vector<NounPhrase>& phrases);
std::vector<NounPhrase> noun_phrases_from_jsonl(std::string_view text);

namespace detail {
// tag name -> space-separated words
const std::vector<std::pair<PosTag, std::string_view>>& embedded_tag_dictionary();
}

}  // namespace revkano
