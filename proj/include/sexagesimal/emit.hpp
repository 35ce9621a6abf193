#pragma once

// Output rendering for family tables and reconstruction reports: plain
// transliteration text, CSV, JSON-lines, and a full JSON report.

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sexagesimal/number.hpp"
#include "sexagesimal/reconstruct.hpp"
#include "sexagesimal/tables.hpp"

namespace sexagesimal {

enum class OutputFormat { text, csv, jsonl, json };

inline OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

// The catchline as written on the tablet, UTF-8.
inline constexpr std::string_view kCatchlineText = "igi-3-g\xC3\xA1l-bi 0;20";

namespace detail {

inline std::string csv_cell(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

inline std::string provenance_cell(const std::vector<EntryProvenance>& provenance) {
  std::string out;
  for (const auto& p : provenance) {
    if (!out.empty()) {
      out += ';';
    }
    out += p.family + ":" + std::to_string(p.step) + ":" +
           std::string(to_string(p.column));
  }
  return out;
}

inline nlohmann::ordered_json row_to_json(const ReciprocalPair& row,
                                          const std::string& family_id) {
  return nlohmann::ordered_json{{"n", row.provenance ? row.provenance->step : 0},
                                {"head", format(row.head)},
                                {"tail", format(row.tail)},
                                {"family", family_id}};
}

inline nlohmann::ordered_json entry_to_json(const TableEntry& entry) {
  nlohmann::ordered_json provenance = nlohmann::ordered_json::array();
  for (const auto& p : entry.provenance) {
    provenance.push_back({{"family", p.family},
                          {"n", p.step},
                          {"column", std::string(to_string(p.column))}});
  }
  return nlohmann::ordered_json{{"head", format(entry.head)},
                                {"tail", format(entry.tail)},
                                {"provenance", std::move(provenance)}};
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const ReconstructionReport& report) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& entry : report.entries) {
    entries.push_back(detail::entry_to_json(entry));
  }
  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (const auto& m : report.mismatches) {
    nlohmann::ordered_json record{{"head", format(m.head)},
                                  {"expected_tail", format(m.expected_tail)}};
    record["actual_tail"] =
        m.actual_tail ? nlohmann::ordered_json(format(*m.actual_tail))
                      : nlohmann::ordered_json(nullptr);
    mismatches.push_back(std::move(record));
  }
  return nlohmann::ordered_json{
      {"total", report.total},
      {"expected_total", report.expected_total},
      {"golden_total", report.golden_total},
      {"matched_golden", report.matched_golden},
      {"mismatches", std::move(mismatches)},
      {"catchline",
       {{"head", format(report.catchline.head)}, {"tail", format(report.catchline.tail)}}},
      {"entries", std::move(entries)},
  };
}

inline void emit_family(std::ostream& os, const FamilyTable& table,
                        OutputFormat fmt) {
  const std::string id = table.spec.id();
  switch (fmt) {
    case OutputFormat::text:
      for (const auto& row : table.rows) {
        os << format(row.head) << ' ' << format(row.tail) << '\n';
      }
      break;
    case OutputFormat::csv:
      os << "n,head,tail,family\n";
      for (const auto& row : table.rows) {
        os << (row.provenance ? row.provenance->step : 0) << ','
           << detail::csv_cell(format(row.head)) << ','
           << detail::csv_cell(format(row.tail)) << ',' << detail::csv_cell(id)
           << '\n';
      }
      break;
    case OutputFormat::jsonl:
      for (const auto& row : table.rows) {
        os << detail::row_to_json(row, id).dump() << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        rows.push_back(detail::row_to_json(row, id));
      }
      os << nlohmann::ordered_json{{"family", id}, {"rows", std::move(rows)}}.dump(2)
         << '\n';
      break;
    }
  }
}

// Emits the ordered table. The json format carries the diff metadata inline;
// for the streaming formats the summary goes through emit_report_summary.
inline void emit_report(std::ostream& os, const ReconstructionReport& report,
                        OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text:
      for (const auto& entry : report.entries) {
        os << "igi " << format(entry.head) << ' ' << format(entry.tail) << '\n';
      }
      os << kCatchlineText << '\n';
      break;
    case OutputFormat::csv:
      os << "head,tail,provenance\n";
      for (const auto& entry : report.entries) {
        os << detail::csv_cell(format(entry.head)) << ','
           << detail::csv_cell(format(entry.tail)) << ','
           << detail::csv_cell(detail::provenance_cell(entry.provenance)) << '\n';
      }
      break;
    case OutputFormat::jsonl:
      for (const auto& entry : report.entries) {
        os << detail::entry_to_json(entry).dump() << '\n';
      }
      break;
    case OutputFormat::json:
      os << report_to_json(report).dump(2) << '\n';
      break;
  }
}

inline void emit_report_summary(std::ostream& os,
                                const ReconstructionReport& report) {
  os << "entries: " << report.total << " (expected " << report.expected_total
     << ")\n"
     << "golden pairs matched: " << report.matched_golden << "/"
     << report.golden_total << "\n"
     << "mismatches: " << report.mismatches.size() << "\n";
}

// Loads a golden pair list from the report JSON schema: either a full report
// object with an "entries" array or a bare array of {head, tail} objects.
inline std::vector<GoldenPair> golden_from_json(std::istream& is) {
  const auto doc = nlohmann::json::parse(is);
  const nlohmann::json& entries = doc.is_array() ? doc : doc.at("entries");
  std::vector<GoldenPair> out;
  out.reserve(entries.size());
  for (const auto& item : entries) {
    out.push_back(GoldenPair{parse(item.at("head").get<std::string>()),
                             parse(item.at("tail").get<std::string>()),
                             item.value("source", std::string("external"))});
  }
  return out;
}

}  // namespace sexagesimal
