#pragma once

// Rebuilds the AO 6456 reciprocal table from the 23 basic families: mantissa
// normalization of both columns, the [1,3) head window, value-level
// deduplication, ascending sort, and a diff against the published excerpts.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sexagesimal/number.hpp"
#include "sexagesimal/regular.hpp"
#include "sexagesimal/tables.hpp"

namespace sexagesimal {

// Pair count of the tablet itself (heads 1 to 3, first section).
inline constexpr std::size_t kAttestedPairCount = 157;

enum class Column { head, tail };

inline std::string_view to_string(Column c) {
  return c == Column::head ? "head" : "tail";
}

struct EntryProvenance {
  std::string family;
  int step = 0;
  Column column = Column::head;

  friend auto operator<=>(const EntryProvenance&, const EntryProvenance&) = default;
};

struct TableEntry {
  Number head;  // value in [1, 3)
  Number tail;  // head * tail = 1 exactly
  std::vector<EntryProvenance> provenance;
};

struct GoldenPair {
  Number head;
  Number tail;
  std::string source;
};

struct DiffRecord {
  Number head;
  Number expected_tail;
  std::optional<Number> actual_tail;  // empty: head absent from the table

  bool absent() const noexcept { return !actual_tail.has_value(); }
};

struct ReconstructionReport {
  std::vector<TableEntry> entries;  // strictly ascending by head value
  std::size_t total = 0;
  std::size_t expected_total = kAttestedPairCount;
  std::size_t matched_golden = 0;
  std::size_t golden_total = 0;
  std::vector<DiffRecord> mismatches;
  ReciprocalPair catchline;  // (3, 0;20), the next tablet's first line
};

// The published rows: the excerpt block (including the 17-place pair) plus
// the ten point-adjusted pairs worked out from the 2^n*5^3 doubling chain.
inline std::vector<GoldenPair> golden_excerpts() {
  struct Raw {
    const char* head;
    const char* tail;
    const char* source;
  };
  static const Raw raw[] = {
      {"1", "1", "excerpt"},
      {"1;0,16,53,53,20", "0;59,43,10,50,52,48", "excerpt"},
      {"1;0,40,53,20", "0;59,19,34,13,7,30", "excerpt"},
      {"1;0,45", "0;59,15,33,20", "excerpt"},
      {"1;1,2,6,33,45", "0;58,58,56,38,24", "excerpt"},
      {"1;1,26,24", "0;58,35,37,30", "excerpt"},
      {"1;1,30,33,45", "0;58,31,39,35,18,31,6,40", "excerpt"},
      {"1;29,12,19,26,34,23,19,49,38,8,36,52,20,44,26,40", "0;40,21,22,41,0,9",
       "excerpt"},
      {"2;15", "0;26,40", "excerpt"},
      {"2;55,46,52,30", "0;20,28,48", "excerpt"},
      {"2;57,46,40", "0;20,15", "excerpt"},
      {"1;48", "0;33,20", "chain 2^n*5^3 n=4"},
      {"1;6,40", "0;54", "chain 2^n*5^3 n=5"},
      {"2;13,20", "0;27", "chain 2^n*5^3 n=6"},
      {"1;41,15", "0;35,33,20", "chain 2^n*5^3 n=10"},
      {"1;11,6,40", "0;50,37,30", "chain 2^n*5^3 n=11"},
      {"1;34,55,18,45", "0;37,55,33,20", "chain 2^n*5^3 n=16"},
      {"1;15,51,6,40", "0;47,27,39,22,30", "chain 2^n*5^3 n=17"},
      {"2;31,42,13,20", "0;23,43,49,41,15", "chain 2^n*5^3 n=18"},
      {"1;28,59,21,19,41,15", "0;40,27,15,33,20", "chain 2^n*5^3 n=22"},
      {"1;20,54,31,6,40", "0;44,29,40,39,50,37,30", "chain 2^n*5^3 n=23"},
  };
  std::vector<GoldenPair> out;
  out.reserve(std::size(raw));
  for (const auto& r : raw) {
    out.push_back(GoldenPair{parse(r.head), parse(r.tail), r.source});
  }
  return out;
}

// Diffs the reconstructed table against a golden pair list: reports golden
// heads that are absent and golden tails that differ digit-for-digit.
inline std::vector<DiffRecord> diff(const ReconstructionReport& report,
                                    const std::vector<GoldenPair>& golden) {
  std::vector<DiffRecord> out;
  for (const auto& g : golden) {
    const auto it = std::lower_bound(
        report.entries.begin(), report.entries.end(), g.head,
        [](const TableEntry& e, const Number& value) { return e.head < value; });
    if (it == report.entries.end() || !(it->head == g.head)) {
      out.push_back(DiffRecord{g.head, g.tail, std::nullopt});
    } else if (!(it->tail == g.tail)) {
      out.push_back(DiffRecord{g.head, g.tail, it->tail});
    }
  }
  return out;
}

inline ReconstructionReport reconstruct(const std::vector<GoldenPair>& golden) {
  std::map<Number, TableEntry> merged;

  const auto add_candidate = [&merged](Number head, Number tail,
                                       EntryProvenance provenance) {
    auto [it, inserted] =
        merged.try_emplace(head, TableEntry{head, tail, {}});
    it->second.provenance.push_back(std::move(provenance));
    (void)inserted;  // equal heads have equal tails: tail = 1/head exactly
  };

  const Number three = Number::from_integer(3);
  for (const FamilySpec& spec : standard_families()) {
    const FamilyTable table = generate_family(spec);
    for (const ReciprocalPair& row : table.rows) {
      // At most one of the two mantissas lands in [1,3): their product is a
      // power of 60, so in-window partners would multiply below 9.
      const auto [vh, sh] = normalize_mantissa(row.head);
      if (vh < three) {
        add_candidate(vh, shift_point(row.tail, sh),
                      {row.provenance->family, row.provenance->step, Column::head});
      }
      const auto [vt, st] = normalize_mantissa(row.tail);
      if (vt < three) {
        add_candidate(vt, shift_point(row.head, st),
                      {row.provenance->family, row.provenance->step, Column::tail});
      }
    }
  }

  // The unit pair is seeded, not derived: no family emits the bare value 1
  // at n >= 1. Its provenance stays empty.
  merged.try_emplace(Number::one(), TableEntry{Number::one(), Number::one(), {}});

  ReconstructionReport report;
  report.entries.reserve(merged.size());
  for (auto& [head, entry] : merged) {
    std::sort(entry.provenance.begin(), entry.provenance.end());
    report.entries.push_back(std::move(entry));
  }
  report.total = report.entries.size();
  report.catchline =
      ReciprocalPair{Number::from_integer(3), parse("0;20"), std::nullopt};
  report.golden_total = golden.size();
  report.mismatches = diff(report, golden);
  report.matched_golden = golden.size() - report.mismatches.size();
  return report;
}

inline ReconstructionReport reconstruct() { return reconstruct(golden_excerpts()); }

}  // namespace sexagesimal
