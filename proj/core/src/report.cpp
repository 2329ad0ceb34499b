#include "koti/report.hpp"

#include <sstream>

#include "json.hpp"

namespace koti {

namespace {

using Json = nlohmann::ordered_json;

std::string event_names(const Event& e) {
  std::string out;
  bool first = true;
  for (const auto& name : e.member_names()) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  return out;
}

std::string cells_masks(const std::vector<Event>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(cells[i].index());
  }
  return out;
}

// ---- table ----------------------------------------------------------------

struct TablePrinter {
  std::ostream& out;

  void operator()(const AssertRow& r) {
    out << "assert line " << r.line << ": " << r.text << " -> "
        << (r.passed ? "pass" : "FAIL") << '\n';
  }

  void operator()(const CornerRow& r) {
    out << "corner: coevent=" << r.coevent << " event=" << r.event.to_string() << " -> corner "
        << corner_number(r.corner) << " (" << corner_reading(r.corner) << ")\n";
  }

  void operator()(const ClassifyRow& r) {
    const SchemeClass& f = r.flags;
    out << "classify: coevent=" << r.coevent << " zero=" << f.is_zero
        << " unital=" << f.is_unital << " proper=" << f.is_proper
        << " multiplicative=" << f.is_multiplicative << " homomorphic=" << f.is_homomorphic
        << '\n';
  }

  void operator()(const CensusRow& r) {
    const CensusReport& c = r.report;
    out << "census: space=" << c.event.space().size() << " event=" << c.event.to_string()
        << " scheme=" << to_string(c.scheme);
    for (int i = 0; i < 4; ++i) out << " c" << i + 1 << "=" << c.corners[i];
    out << " total=" << c.total << '\n';
  }

  void operator()(const DenyAllRow& r) {
    out << "deny_all: coevent=" << r.coevent << " cells=[";
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      if (i) out << ' ';
      out << r.cells[i].to_string();
    }
    out << "] -> " << (r.denies_all ? "true" : "false") << '\n';
  }

  void operator()(const DenialCensusRow& r) {
    out << "denial_census: space=" << r.space_size << " cells=[";
    for (std::size_t i = 0; i < r.report.cells.size(); ++i) {
      if (i) out << ' ';
      out << r.report.cells[i].to_string();
    }
    out << "] scheme=" << to_string(r.report.scheme) << " count=" << r.report.deniers
        << " total=" << r.report.total << '\n';
  }

  void operator()(const NagarjunaRow& r) {
    out << "nagarjuna: space=" << r.report.event.space().size()
        << " event=" << r.report.event.to_string() << " universe=" << to_string(r.report.universe)
        << " scheme2=" << to_string(r.report.scheme2) << " count=" << r.report.deniers
        << " total=" << r.report.total << '\n';
  }

  void operator()(const CausationRow& r) {
    out << "causation: outcomes={";
    const auto& names = r.setup.space.outcomes();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ',';
      out << names[i];
    }
    out << "} cells=[";
    for (std::size_t i = 0; i < r.setup.cells.size(); ++i) {
      if (i) out << ' ';
      out << r.setup.cells[i].to_string();
    }
    out << "] homomorphic=" << r.homomorphic << " multiplicative=" << r.multiplicative
        << " all=" << r.all << '\n';
  }
};

std::string render_table(const Report& report) {
  std::ostringstream out;
  if (report.space) {
    out << "space " << (report.space_name ? *report.space_name : std::string("?")) << " = {";
    const auto& names = report.space->outcomes();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ',';
      out << names[i];
    }
    out << "}\n";
  }
  TablePrinter printer{out};
  for (const ReportRow& row : report.rows) std::visit(printer, row);
  out << "asserts: total=" << report.asserts_total << " failed=" << report.asserts_failed << '\n';
  return out.str();
}

// ---- json -----------------------------------------------------------------

Json to_json(const AssertRow& r) {
  return Json{{"kind", "assert"}, {"line", r.line}, {"col", r.col}, {"text", r.text},
              {"pass", r.passed}};
}

Json to_json(const CornerRow& r) {
  return Json{{"kind", "corner"},
              {"coevent", r.coevent},
              {"event", event_names(r.event)},
              {"corner", corner_number(r.corner)},
              {"reading", std::string(corner_reading(r.corner))}};
}

Json to_json(const ClassifyRow& r) {
  return Json{{"kind", "classify"},
              {"coevent", r.coevent},
              {"flags",
               Json{{"zero", r.flags.is_zero},
                    {"unital", r.flags.is_unital},
                    {"proper", r.flags.is_proper},
                    {"multiplicative", r.flags.is_multiplicative},
                    {"homomorphic", r.flags.is_homomorphic}}}};
}

Json to_json(const CensusRow& r, bool with_kind) {
  Json j = Json::object();
  if (with_kind) j["kind"] = "census";
  j["space"] = r.report.event.space().size();
  j["event"] = event_names(r.report.event);
  j["scheme"] = std::string(to_string(r.report.scheme));
  j["corners"] = Json{{"c1", r.report.corners[0]},
                      {"c2", r.report.corners[1]},
                      {"c3", r.report.corners[2]},
                      {"c4", r.report.corners[3]}};
  j["total"] = r.report.total;
  return j;
}

Json to_json(const DenyAllRow& r) {
  Json cells = Json::array();
  for (const Event& cell : r.cells) cells.push_back(event_names(cell));
  return Json{{"kind", "deny_all"}, {"coevent", r.coevent}, {"cells", cells},
              {"denies_all", r.denies_all}};
}

Json to_json(const DenialCensusRow& r) {
  Json cells = Json::array();
  for (const Event& cell : r.report.cells) cells.push_back(event_names(cell));
  return Json{{"kind", "denial_census"}, {"space", r.space_size},    {"cells", cells},
              {"scheme", std::string(to_string(r.report.scheme))},   {"count", r.report.deniers},
              {"total", r.report.total}};
}

Json to_json(const NagarjunaRow& r, bool with_kind) {
  Json j = Json::object();
  if (with_kind) j["kind"] = "nagarjuna";
  j["space"] = r.report.event.space().size();
  j["event"] = event_names(r.report.event);
  j["universe"] = std::string(to_string(r.report.universe));
  j["scheme2"] = std::string(to_string(r.report.scheme2));
  j["count"] = r.report.deniers;
  j["total"] = r.report.total;
  return j;
}

Json to_json(const CausationRow& r) {
  Json cells = Json::array();
  for (const Event& cell : r.setup.cells) cells.push_back(event_names(cell));
  return Json{{"kind", "causation"},
              {"outcomes", r.setup.space.outcomes()},
              {"cells", cells},
              {"denial_census", Json{{"homomorphic", r.homomorphic},
                                     {"multiplicative", r.multiplicative},
                                     {"all", r.all}}}};
}

Json row_to_json(const ReportRow& row) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CensusRow> || std::is_same_v<T, NagarjunaRow>)
          return to_json(r, true);
        else
          return to_json(r);
      },
      row);
}

std::string render_json(const Report& report) {
  Json j = Json::object();
  if (report.space) {
    j["space"] = Json{{"name", report.space_name ? *report.space_name : std::string()},
                      {"outcomes", report.space->outcomes()}};
  }
  Json rows = Json::array();
  for (const ReportRow& row : report.rows) rows.push_back(row_to_json(row));
  j["results"] = rows;
  j["asserts"] = Json{{"total", report.asserts_total}, {"failed", report.asserts_failed}};
  return j.dump(2) + "\n";
}

// ---- csv ------------------------------------------------------------------

struct CsvSection {
  const char* header;
  std::vector<std::string> lines;
};

struct CsvCollector {
  // Sections appear in this fixed order; empty ones are dropped.
  CsvSection asserts{"line,col,pass", {}};
  CsvSection censuses{"space_size,event_mask,scheme,c1,c2,c3,c4,total", {}};
  CsvSection corners{"coevent,event_mask,corner", {}};
  CsvSection classifies{"coevent,is_zero,is_unital,is_proper,is_multiplicative,is_homomorphic",
                        {}};
  CsvSection deny_alls{"coevent,cell_masks,denies_all", {}};
  CsvSection denial_censuses{"space_size,cell_masks,scheme,count,total", {}};
  CsvSection nagarjunas{"space_size,event_mask,universe,scheme2,count,total", {}};
  CsvSection causations{"space_size,cell_masks,homomorphic,multiplicative,all", {}};

  void operator()(const AssertRow& r) {
    asserts.lines.push_back(std::to_string(r.line) + "," + std::to_string(r.col) + "," +
                            (r.passed ? "1" : "0"));
  }

  void operator()(const CensusRow& r) {
    std::ostringstream line;
    line << r.report.event.space().size() << ',' << r.report.event.index() << ','
         << to_string(r.report.scheme);
    for (int i = 0; i < 4; ++i) line << ',' << r.report.corners[i];
    line << ',' << r.report.total;
    censuses.lines.push_back(line.str());
  }

  void operator()(const CornerRow& r) {
    corners.lines.push_back(r.coevent + "," + std::to_string(r.event.index()) + "," +
                            std::to_string(corner_number(r.corner)));
  }

  void operator()(const ClassifyRow& r) {
    const SchemeClass& f = r.flags;
    std::ostringstream line;
    line << r.coevent << ',' << f.is_zero << ',' << f.is_unital << ',' << f.is_proper << ','
         << f.is_multiplicative << ',' << f.is_homomorphic;
    classifies.lines.push_back(line.str());
  }

  void operator()(const DenyAllRow& r) {
    deny_alls.lines.push_back(r.coevent + "," + cells_masks(r.cells) + "," +
                              (r.denies_all ? "1" : "0"));
  }

  void operator()(const DenialCensusRow& r) {
    std::ostringstream line;
    line << r.space_size << ',' << cells_masks(r.report.cells) << ','
         << to_string(r.report.scheme) << ',' << r.report.deniers << ',' << r.report.total;
    denial_censuses.lines.push_back(line.str());
  }

  void operator()(const NagarjunaRow& r) {
    std::ostringstream line;
    line << r.report.event.space().size() << ',' << r.report.event.index() << ','
         << to_string(r.report.universe) << ',' << to_string(r.report.scheme2) << ','
         << r.report.deniers << ',' << r.report.total;
    nagarjunas.lines.push_back(line.str());
  }

  void operator()(const CausationRow& r) {
    std::vector<Event> cells(r.setup.cells.begin(), r.setup.cells.end());
    std::ostringstream line;
    line << r.setup.space.size() << ',' << cells_masks(cells) << ',' << r.homomorphic << ','
         << r.multiplicative << ',' << r.all;
    causations.lines.push_back(line.str());
  }

  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (const CsvSection* section :
         {&asserts, &censuses, &corners, &classifies, &deny_alls, &denial_censuses, &nagarjunas,
          &causations}) {
      if (section->lines.empty()) continue;
      if (!first) out << '\n';
      out << section->header << '\n';
      for (const auto& line : section->lines) out << line << '\n';
      first = false;
    }
    return out.str();
  }
};

std::string render_csv(const Report& report) {
  CsvCollector collector;
  for (const ReportRow& row : report.rows) std::visit(collector, row);
  return collector.str();
}

} // namespace

std::optional<ReportFormat> report_format_from_string(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(report);
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
  }
  return {};
}

std::string render_bare(const ReportRow& row, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: {
      std::ostringstream out;
      std::visit(TablePrinter{out}, row);
      return out.str();
    }
    case ReportFormat::Json: {
      Json j = std::visit(
          [](const auto& r) -> Json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, CensusRow> || std::is_same_v<T, NagarjunaRow>)
              return to_json(r, false);
            else
              return to_json(r);
          },
          row);
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      CsvCollector collector;
      std::visit(collector, row);
      return collector.str();
    }
  }
  return {};
}

} // namespace koti
