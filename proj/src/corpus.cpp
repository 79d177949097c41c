#include "revkano/corpus.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "revkano/text_util.hpp"

namespace revkano {

using nlohmann::json;

bool Corpus::add(Review review) {
  auto& ids = ids_[review.entity_id];
  auto it = std::lower_bound(ids.begin(), ids.end(), review.review_id);
  if (it != ids.end() && *it == review.review_id) return false;
  ids.insert(it, review.review_id);
  ++counts_[review.entity_id];
  reviews_.push_back(std::move(review));
  return true;
}

namespace {

std::optional<std::string> parse_review(const std::string& line, Review& out) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error&) {
    return "invalid JSON";
  }
  if (!j.is_object()) return "not a JSON object";
  for (const char* key : {"entity", "review_id", "text"}) {
    if (!j.contains(key)) return std::string("missing field ") + key;
    if (!j[key].is_string()) return std::string("field ") + key + " is not a string";
  }
  out.entity_id = j["entity"].get<std::string>();
  out.review_id = j["review_id"].get<std::string>();
  out.text = j["text"].get<std::string>();
  if (trim(out.entity_id).empty()) return "empty entity";
  if (out.review_id.empty()) return "empty review_id";
  if (trim(out.text).empty()) return "empty text";
  if (j.contains("rating") && !j["rating"].is_null()) {
    if (!j["rating"].is_number_integer()) return "rating is not an integer";
    int r = j["rating"].get<int>();
    if (r < 1 || r > 5) return "rating out of range";
    out.rating = r;
  }
  if (j.contains("timestamp") && !j["timestamp"].is_null()) {
    if (!j["timestamp"].is_string()) return "timestamp is not a string";
    out.timestamp = j["timestamp"].get<std::string>();
  }
  return std::nullopt;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

IngestResult ingest_reviews_text(std::string_view jsonl) {
  IngestResult result;
  std::size_t line_no = 0;
  for (const auto& raw : split(jsonl, '\n')) {
    ++line_no;
    if (trim(raw).empty()) continue;
    Review review;
    if (auto err = parse_review(raw, review)) {
      result.rejects.push_back({line_no, *err});
      continue;
    }
    if (!result.corpus.add(std::move(review))) {
      result.rejects.push_back({line_no, "duplicate review_id"});
    }
  }
  return result;
}

IngestResult ingest_reviews(const std::filesystem::path& path) {
  return ingest_reviews_text(read_file(path));
}

std::vector<std::string> segment(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    auto t = trim(current);
    if (!t.empty()) out.push_back(std::move(t));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n' || c == '\r') {
      flush();
    } else if (is_terminal(c)) {
      current += c;
      while (i + 1 < text.size() && is_terminal(text[i + 1])) current += text[++i];
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

std::string collapse_elongation(std::string_view word) {
  std::string out;
  for (char c : word) {
    std::size_t n = out.size();
    if (n >= 2 && std::isalpha(static_cast<unsigned char>(c)) && out[n - 1] == c && out[n - 2] == c) continue;
    out += c;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view sentence, const TokenizeOptions& opts) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    std::size_t start = i;
    while (i < sentence.size() && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    if (start == i) break;
    std::string_view surface = sentence.substr(start, i - start);

    // Non-ASCII bytes (emoji, symbols) are dropped before stripping.
    std::string ascii;
    for (char c : surface) {
      if (static_cast<unsigned char>(c) < 0x80) ascii += c;
    }
    std::size_t b = 0;
    std::size_t e = ascii.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(ascii[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(ascii[e - 1]))) --e;
    std::string norm = to_lower(std::string_view(ascii).substr(b, e - b));
    if (opts.collapse_elongation) norm = collapse_elongation(norm);
    if (norm.empty()) continue;
    tokens.push_back({std::string(surface), std::move(norm), static_cast<int>(tokens.size())});
  }
  return tokens;
}

std::vector<Sentence> build_sentences(const Corpus& corpus, const TokenizeOptions& opts) {
  std::vector<Sentence> out;
  for (const auto& review : corpus.reviews()) {
    int index = 0;
    for (const auto& text : segment(review.text)) {
      auto tokens = tokenize(text, opts);
      if (tokens.empty()) continue;
      out.push_back({review.entity_id, review.review_id, index++, std::move(tokens)});
    }
  }
  return out;
}

std::string rejects_csv(const std::vector<Reject>& rejects) {
  std::string out = "line,reason\n";
  for (const auto& r : rejects) out += csv_line({std::to_string(r.line), r.reason});
  return out;
}

std::string sentences_to_jsonl(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    json toks = json::array();
    for (const auto& t : s.tokens) toks.push_back(json::array({t.surface, t.norm}));
    json j = {{"entity", s.entity_id}, {"review_id", s.review_id}, {"index", s.index}, {"tokens", toks}};
    out += j.dump(-1, ' ', false, json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<Sentence> sentences_from_jsonl(std::string_view text) {
  std::vector<Sentence> out;
  for (const auto& line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    auto j = json::parse(line);
    Sentence s;
    s.entity_id = j.at("entity").get<std::string>();
    s.review_id = j.at("review_id").get<std::string>();
    s.index = j.at("index").get<int>();
    int pos = 0;
    for (const auto& t : j.at("tokens")) {
      s.tokens.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(), pos++});
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string review_counts_to_json(const std::map<std::string, std::size_t>& counts) {
  json j = json::object();
  for (const auto& [entity, n] : counts) j[entity] = n;
  return j.dump(2) + "\n";
}

std::map<std::string, std::size_t> review_counts_from_json(std::string_view text) {
  std::map<std::string, std::size_t> out;
  auto j = json::parse(text);
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::size_t>();
  return out;
}

}  // namespace revkano
