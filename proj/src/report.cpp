#include "revkano/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "revkano/text_util.hpp"

namespace revkano {

SentimentBar bar(double positive, double negative) {
  if (!(positive >= 0.0) || !(negative >= 0.0)) {
    throw std::invalid_argument("bar: scores must be non-negative");
  }
  const double total = positive + negative;
  if (total == 0.0) return std::nullopt;
  return positive / total;
}

OverallTable overall_table(const std::map<std::string, KanoBucket>& assignments,
                           const std::vector<CategoryScore>& categories) {
  OverallTable table;
  std::vector<std::string> unassigned;
  for (const auto& c : categories) {
    SummaryRow row;
    if (auto it = assignments.find(c.category_id); it != assignments.end()) {
      row.bucket = it->second;
    } else {
      unassigned.push_back(c.category_id);
    }
    row.category_id = c.category_id;
    row.label = c.label;
    row.positive = c.score.positive;
    row.negative = c.score.negative;
    row.bar = bar(c.score.positive, c.score.negative);
    table.rows.push_back(std::move(row));
  }
  auto rank = [](const SummaryRow& r) { return r.bucket ? static_cast<int>(*r.bucket) : 99; };
  std::stable_sort(table.rows.begin(), table.rows.end(), [&](const SummaryRow& a, const SummaryRow& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.positive != b.positive) return a.positive > b.positive;
    return a.label < b.label;
  });
  if (!unassigned.empty()) {
    table.warnings.push_back("categories without a bucket assignment: " + join(unassigned, ", "));
  }
  return table;
}

EntityTable entity_table(const OverallTable& overall,
                         const std::map<std::pair<std::string, std::string>, AspectScore>& entity_scores,
                         const std::map<std::string, std::size_t>& review_counts) {
  EntityTable table;
  for (const auto& [entity, _] : review_counts) table.entities.push_back(entity);
  for (const auto& src : overall.rows) {
    EntityRow row{src.bucket, src.category_id, src.label, {}};
    for (const auto& [entity, count] : review_counts) {
      AspectScore raw;
      if (auto it = entity_scores.find({entity, src.category_id}); it != entity_scores.end()) raw = it->second;
      auto norm = normalize_per_entity(raw, count);
      if (norm) {
        norm->positive *= kEntityDisplayScale;
        norm->negative *= kEntityDisplayScale;
      }
      row.cells.push_back(norm);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  auto n = to_lower(name);
  if (n == "csv") return ReportFormat::csv;
  if (n == "md" || n == "markdown") return ReportFormat::md;
  if (n == "html") return ReportFormat::html;
  return std::nullopt;
}

std::string_view extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::csv: return "csv";
    case ReportFormat::md: return "md";
    case ReportFormat::html: return "html";
  }
  return "txt";
}

namespace {

std::string bucket_label(const std::optional<KanoBucket>& b) {
  return b ? std::string(display_name(*b)) : std::string("Unassigned");
}

std::string bar_text(const SentimentBar& b, int decimals) { return b ? format_fixed(*b, decimals) : std::string(); }

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string md_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string html_bar(const SentimentBar& b) {
  if (!b) return "<td class=\"bar\"></td>";
  const long green = std::lround(*b * 100.0);
  return "<td class=\"bar\"><div class=\"track\"><div class=\"pos\" style=\"width:" + std::to_string(green) +
         "%\"></div><div class=\"neg\" style=\"width:" + std::to_string(100 - green) + "%\"></div></div><span>" +
         format_fixed(*b, 2) + "</span></td>";
}

const char* kHtmlHead =
    "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>%TITLE%</title>\n<style>\n"
    "body{font-family:sans-serif;margin:2em}table{border-collapse:collapse}\n"
    "th,td{border:1px solid #bbb;padding:4px 8px}td.num{text-align:right}\n"
    "td.bucket{font-weight:bold;vertical-align:top}\n"
    ".track{display:inline-flex;width:120px;height:12px;margin-right:6px;vertical-align:middle}\n"
    ".pos{background:#2e9e44;height:100%}.neg{background:#d23c3c;height:100%}\n"
    "</style></head><body>\n<h1>%TITLE%</h1>\n";

std::string html_head(std::string_view title) {
  std::string head = kHtmlHead;
  for (std::size_t p; (p = head.find("%TITLE%")) != std::string::npos;) head.replace(p, 7, html_escape(title));
  return head;
}

}  // namespace

std::string render_overall(const OverallTable& table, ReportFormat format) {
  std::string out;
  switch (format) {
    case ReportFormat::csv:
      out += csv_line({"bucket", "category_id", "aspects", "positive", "negative", "bar"});
      for (const auto& r : table.rows) {
        out += csv_line({bucket_label(r.bucket), r.category_id, r.label, format_fixed(r.positive, 3),
                         format_fixed(r.negative, 3), bar_text(r.bar, 3)});
      }
      break;
    case ReportFormat::md: {
      out += "| Bucket | Aspects | Positive Score | Negative Score | Colour Bar |\n";
      out += "|---|---|---:|---:|---:|\n";
      std::string last;
      for (const auto& r : table.rows) {
        auto b = bucket_label(r.bucket);
        out += "| " + (b == last ? std::string() : b) + " | " + md_escape(r.label) + " | " +
               format_fixed(r.positive, 3) + " | " + format_fixed(r.negative, 3) + " | " + bar_text(r.bar, 2) +
               " |\n";
        last = b;
      }
      break;
    }
    case ReportFormat::html: {
      out += html_head("Overall sentiment score per aspect category");
      out += "<table>\n<tr><th>Bucket</th><th>Aspects</th><th>Positive Score</th><th>Negative Score</th>"
             "<th>Colour Bar</th></tr>\n";
      std::string last;
      for (const auto& r : table.rows) {
        auto b = bucket_label(r.bucket);
        out += "<tr><td class=\"bucket\">" + (b == last ? std::string() : html_escape(b)) + "</td><td>" +
               html_escape(r.label) + "</td><td class=\"num\">" + format_fixed(r.positive, 3) +
               "</td><td class=\"num\">" + format_fixed(r.negative, 3) + "</td>" + html_bar(r.bar) + "</tr>\n";
        last = b;
      }
      out += "</table>\n</body></html>\n";
      break;
    }
  }
  return out;
}

std::string render_entities(const EntityTable& table, ReportFormat format) {
  auto cell = [](const std::optional<AspectScore>& c, bool positive) {
    return c ? format_fixed(positive ? c->positive : c->negative, 3) : std::string();
  };
  std::string out;
  switch (format) {
    case ReportFormat::csv: {
      CsvRow header{"bucket", "category_id", "aspects"};
      for (const auto& e : table.entities) {
        header.push_back(e + " positive");
        header.push_back(e + " negative");
      }
      out += csv_line(header);
      for (const auto& r : table.rows) {
        CsvRow row{bucket_label(r.bucket), r.category_id, r.label};
        for (const auto& c : r.cells) {
          row.push_back(cell(c, true));
          row.push_back(cell(c, false));
        }
        out += csv_line(row);
      }
      break;
    }
    case ReportFormat::md: {
      out += "Scores per review, scale 10^-4.\n\n| Bucket | Aspects |";
      std::string rule = "|---|---|";
      for (const auto& e : table.entities) {
        out += " " + md_escape(e) + " + | " + md_escape(e) + " - |";
        rule += "---:|---:|";
      }
      out += "\n" + rule + "\n";
      std::string last;
      for (const auto& r : table.rows) {
        auto b = bucket_label(r.bucket);
        out += "| " + (b == last ? std::string() : b) + " | " + md_escape(r.label) + " |";
        for (const auto& c : r.cells) out += " " + cell(c, true) + " | " + cell(c, false) + " |";
        out += "\n";
        last = b;
      }
      break;
    }
    case ReportFormat::html: {
      out += html_head("Sentiment score per entity (per review, scale 10^-4)");
      out += "<table>\n<tr><th rowspan=\"2\">Bucket</th><th rowspan=\"2\">Aspects</th>";
      for (const auto& e : table.entities) out += "<th colspan=\"2\">" + html_escape(e) + "</th>";
      out += "</tr>\n<tr>";
      for (std::size_t i = 0; i < table.entities.size(); ++i) out += "<th>Positive</th><th>Negative</th>";
      out += "</tr>\n";
      std::string last;
      for (const auto& r : table.rows) {
        auto b = bucket_label(r.bucket);
        out += "<tr><td class=\"bucket\">" + (b == last ? std::string() : html_escape(b)) + "</td><td>" +
               html_escape(r.label) + "</td>";
        for (const auto& c : r.cells) {
          out += "<td class=\"num\">" + cell(c, true) + "</td><td class=\"num\">" + cell(c, false) + "</td>";
        }
        out += "</tr>\n";
        last = b;
      }
      out += "</table>\n</body></html>\n";
      break;
    }
  }
  return out;
}

std::vector<std::filesystem::path> render(const OverallTable& overall, const EntityTable& entities,
                                          ReportFormat format, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  const std::string ext(extension(format));
  std::vector<std::filesystem::path> written{out_dir / ("overall." + ext), out_dir / ("entities." + ext)};
  write_file(written[0], render_overall(overall, format));
  write_file(written[1], render_entities(entities, format));
  return written;
}

std::vector<ParsedOverallRow> parse_overall_csv(std::string_view csv) {
  std::vector<ParsedOverallRow> out;
  auto rows = parse_csv(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 6) throw std::runtime_error("overall csv: row " + std::to_string(i + 1) + " has wrong width");
    ParsedOverallRow p{r[0], r[1], r[2], std::stod(r[3]), std::stod(r[4]), std::nullopt};
    if (!r[5].empty()) p.bar = std::stod(r[5]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace revkano
