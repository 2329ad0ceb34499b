#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koti/second_order.hpp"

namespace koti {

struct AssertRow {
  std::size_t line = 0;
  std::size_t col = 0;
  std::string text; // canonical statement text
  bool passed = false;
};

struct CornerRow {
  std::string coevent;
  Event event;
  Corner corner;
};

struct ClassifyRow {
  std::string coevent;
  SchemeClass flags;
};

struct CensusRow {
  CensusReport report;
};

struct DenyAllRow {
  std::string coevent;
  std::vector<Event> cells;
  bool denies_all = false;
};

struct DenialCensusRow {
  DenialCensusReport report;
  std::size_t space_size = 0;
};

struct NagarjunaRow {
  NagarjunaReport report;
};

struct CausationRow {
  CausationTetralemma setup;
  Count homomorphic = 0;
  Count multiplicative = 0;
  Count all = 0;
};

using ReportRow = std::variant<AssertRow, CornerRow, ClassifyRow, CensusRow, DenyAllRow,
                               DenialCensusRow, NagarjunaRow, CausationRow>;

struct Report {
  std::optional<std::string> space_name;
  std::optional<SampleSpace> space;
  std::vector<ReportRow> rows;
  Count asserts_total = 0;
  Count asserts_failed = 0;
};

enum class ReportFormat { Table, Json, Csv };

std::optional<ReportFormat> report_format_from_string(std::string_view text);

std::string render(const Report& report, ReportFormat format);

// Single-row output for the census and nagarjuna subcommands: the JSON form
// is the bare object {space, event, scheme, corners, total} (resp. the
// nagarjuna analogue), the CSV form is a header plus one row.
std::string render_bare(const ReportRow& row, ReportFormat format);

} // namespace koti
