#include "doctest.h"
#include "revkano/tagger.hpp"
#include "revkano/text_util.hpp"

using namespace revkano;

namespace {

std::vector<Token> toks(std::initializer_list<const char*> words) {
  std::vector<Token> out;
  for (const char* w : words) out.push_back({w, w, static_cast<int>(out.size())});
  return out;
}

std::vector<NounPhrase> chunk_words(const LexiconTagger& t, std::initializer_list<const char*> words,
                                    ChunkOptions opts = {}) {
  auto tokens = toks(words);
  auto tags = t.tag(tokens);
  return chunk(tokens, tags, 0, opts);
}

}  // namespace

TEST_CASE("tag: dictionary lookups and NOUN default") {
  LexiconTagger t;
  CHECK(t.tag(toks({"great", "app"})) == std::vector<PosTag>{PosTag::ADJ, PosTag::NOUN});
  CHECK(t.tag(toks({"qwzrtx"})) == std::vector<PosTag>{PosTag::NOUN});
  CHECK(t.tag(toks({"i", "love", "it"})) == std::vector<PosTag>{PosTag::PRON, PosTag::VERB, PosTag::PRON});
  CHECK(t.dictionary_size() > 1000);
}

TEST_CASE("tag: suffix heuristics") {
  LexiconTagger t;
  CHECK(t.tag_word("zorbing") == PosTag::VERB);
  CHECK(t.tag_word("zorbly") == PosTag::ADV);
  CHECK(t.tag_word("zorbs") == PosTag::NOUN);
  CHECK(t.tag_word("hates") == PosTag::VERB);
  CHECK(t.tag_word("messaging") == PosTag::NOUN);  // dictionary wins over suffix
  CHECK(t.tag_word("family") == PosTag::NOUN);
  CHECK(t.tag_word("42") == PosTag::OTHER);
}

TEST_CASE("tag lexicon overrides merge over the dictionary") {
  LexiconTagger t;
  t.load_overrides_text("# comment\ngreat\tNOUN\nkik\tproper_noun\n");
  CHECK(t.tag_word("great") == PosTag::NOUN);
  CHECK(t.tag_word("kik") == PosTag::PROPER_NOUN);
  CHECK_THROWS_AS(t.load_overrides_text("bad line"), ConfigError);
  CHECK_THROWS_AS(t.load_overrides_text("w\tNOPE"), ConfigError);
}

TEST_CASE("chunk: grammar") {
  LexiconTagger t;
  auto nps = chunk_words(t, {"the", "video", "call", "feature"});
  REQUIRE(nps.size() == 1);
  CHECK(nps[0].terms == std::vector<std::string>{"video", "call", "feature"});
  CHECK(nps[0].start == 0);
  CHECK(nps[0].end == 4);

  CHECK(chunk_words(t, {"love", "it"}).empty());

  auto two = chunk_words(t, {"great", "app", "but", "the", "worst", "update"});
  REQUIRE(two.size() == 2);
  CHECK(two[0].terms == std::vector<std::string>{"great", "app"});
  CHECK(two[1].terms == std::vector<std::string>{"worst", "update"});
}

TEST_CASE("chunk: coalescing across a preposition") {
  LexiconTagger t;
  auto nps = chunk_words(t, {"end", "to", "end", "encryption"});
  REQUIRE(nps.size() == 1);
  CHECK(nps[0].terms == std::vector<std::string>{"end", "to", "end", "encryption"});
  CHECK(nps[0].coalesced);
  CHECK(nps[0].prep_pos == 1);

  ChunkOptions off;
  off.coalesce_prepositions = false;
  CHECK(chunk_words(t, {"end", "to", "end", "encryption"}, off).size() == 2);

  auto det = chunk_words(t, {"quality", "of", "the", "calls"});
  REQUIRE(det.size() == 1);
  CHECK(det[0].terms == std::vector<std::string>{"quality", "of", "calls"});
}

TEST_CASE("chunk invariants over random tag sequences") {
  LexiconTagger t;
  const char* vocab[] = {"the", "a", "great", "new", "app", "chat", "to", "of", "is", "love", "it", "very", "and"};
  unsigned state = 12345;
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Token> tokens;
    int n = 1 + static_cast<int>((state = state * 1103515245u + 12345u) >> 16) % 12;
    for (int i = 0; i < n; ++i) {
      state = state * 1103515245u + 12345u;
      const char* w = vocab[(state >> 16) % 13];
      tokens.push_back({w, w, i});
    }
    auto tags = t.tag(tokens);
    CHECK(tags == t.tag(tokens));
    auto nps = chunk(tokens, tags);
    int prev_end = 0;
    for (const auto& np : nps) {
      CHECK(np.start >= prev_end);
      CHECK(np.end <= n);
      CHECK(np.start < np.end);
      CHECK(!np.terms.empty());
      bool noun = false;
      for (int p = np.start; p < np.end; ++p) noun = noun || is_noun(tags[p]);
      CHECK(noun);
      prev_end = np.end;
    }
  }
}

TEST_CASE("noun phrase serialization round trips") {
  LexiconTagger t;
  std::vector<Sentence> sentences{{"A", "1", 0, toks({"the", "end", "to", "end", "encryption", "is", "great"})},
                                  {"A", "1", 1, toks({"love", "stickers"})}};
  auto nps = extract_noun_phrases(sentences, t);
  REQUIRE(nps.size() == 2);
  CHECK(nps[1].sentence == 1);
  CHECK(noun_phrases_from_jsonl(noun_phrases_to_jsonl(nps)) == nps);
  CHECK(extract_noun_phrases(sentences, t, {}, 4) == nps);
}
