#pragma once

// Index x axiom grid, comparison with the published expectations, and the
// Markdown / JSON renderings of the result.

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcmtk/axioms.hpp"
#include "pcmtk/indices.hpp"
#include "pcmtk/io.hpp"
#include "pcmtk/version.hpp"

namespace pcmtk {

enum class Expected { Satisfies, Dissatisfies, Unknown };

inline const char* to_string(Expected e) {
  switch (e) {
    case Expected::Satisfies: return "Satisfies";
    case Expected::Dissatisfies: return "Dissatisfies";
    case Expected::Unknown: return "Unknown";
  }
  return "?";
}

inline Expected expected_from_string(std::string_view s) {
  if (s == "Satisfies") return Expected::Satisfies;
  if (s == "Dissatisfies") return Expected::Dissatisfies;
  if (s == "Unknown") return Expected::Unknown;
  throw PcmError(ErrorCode::ParseError, "unknown expectation '" + std::string(s) + "'");
}

struct Expectation {
  std::string index;
  std::string axiom;
  Expected expected;
  std::string source;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

namespace detail {

struct ExpectationRow {
  std::string_view index;
  // One character per default axiom, in default_axioms() order:
  // S satisfies, D dissatisfies, U unknown.
  std::string_view codes;
  std::string_view bf, mz, ku, cs;
};

// Column groups: bf_a1..5 | bf6 | mz | ku_a1..4 | ks_a1..3 | cs_1..6
inline constexpr ExpectationRow kExpectationRows[] = {
    {"ci", "SSSSS" "S" "D" "UDUD" "UUU" "UUUUUU", "satisfies A1-A6", "dissatisfies the boundedness axiom",
     "dissatisfies A2 and A4", "-"},
    {"cr", "SSSSS" "S" "D" "UDUD" "UUU" "UUUUUU", "as CI (CR is CI rescaled per order)", "as CI", "as CI", "-"},
    {"ki", "SSSSS" "S" "S" "UUUU" "UUU" "SSSSSS", "satisfies A1-A6", "satisfies the boundedness axiom", "-",
     "satisfies all six properties"},
    {"gci", "SSSSS" "S" "D" "UUUU" "UUU" "UUUUUU", "satisfies A1-A6", "dissatisfies the boundedness axiom", "-", "-"},
    {"ci_star", "SSSSS" "U" "D" "UUUU" "UUU" "UUUUUU", "satisfies A1-A5; A6 not listed", "dissatisfies the boundedness axiom", "-", "-"},
    {"hci", "SSDSS" "S" "U" "UUUU" "UUU" "UUUUUU", "dissatisfies A3, satisfies the rest", "-", "-", "-"},
    {"gw", "SSDUS" "S" "S" "UUUU" "UUU" "UUUUUU", "dissatisfies A3; A4 not listed", "satisfies the boundedness axiom", "-", "-"},
    {"re", "SSSDD" "S" "S" "UUUU" "UUU" "UUUUUU", "dissatisfies A4 and A5", "satisfies the boundedness axiom", "-", "-"},
};

}  // namespace detail

/// Frozen encoding of the published compliance table for the eight built-in
/// indices over the default axiom grid. Cells the table leaves blank or
/// marks '-' are Unknown.
inline std::vector<Expectation> expected_matrix() {
  std::vector<Expectation> out;
  const auto& axioms = default_axioms();
  for (const auto& row : detail::kExpectationRows) {
    for (std::size_t a = 0; a < axioms.size(); ++a) {
      const char c = row.codes[a];
      const Expected e = c == 'S' ? Expected::Satisfies : c == 'D' ? Expected::Dissatisfies : Expected::Unknown;
      const std::string_view sys = axioms[a].system;
      std::string_view cell = sys == "BF" ? row.bf : sys == "MZ" ? row.mz : sys == "KU" ? row.ku : sys == "CS" ? row.cs : "-";
      std::string source = "compliance table, " + std::string(row.index) + " row, " + std::string(sys) + " column: " + std::string(cell);
      out.push_back({std::string(row.index), std::string(axioms[a].id), e, std::move(source)});
    }
  }
  return out;
}

inline std::optional<Expectation> find_expectation(const std::vector<Expectation>& es, std::string_view index,
                                                   std::string_view axiom) {
  for (const auto& e : es)
    if (e.index == index && e.axiom == axiom) return e;
  return std::nullopt;
}

struct ComplianceCell {
  std::string index;
  std::string axiom;
  AxiomVerdict verdict;
  /// Set when the checker threw; the verdict is then Inapplicable.
  std::optional<std::string> error;
};

struct RunMetadata {
  std::uint64_t seed;
  std::size_t trials;
  std::vector<std::size_t> orders;
  double tol;
  std::size_t search_budget;
  std::string ku_a3_measure;
  std::string toolkit_version;
};

struct ComplianceMatrix {
  std::vector<std::string> indices;
  std::vector<std::string> axioms;
  std::vector<ComplianceCell> cells;  // row-major: index, then axiom
  std::vector<Expectation> expectations;
  RunMetadata metadata;

  const ComplianceCell& at(std::size_t i, std::size_t a) const { return cells[i * axioms.size() + a]; }
};

inline std::vector<std::string> default_axiom_ids() {
  std::vector<std::string> ids;
  for (const auto& a : default_axioms()) ids.emplace_back(a.id);
  return ids;
}

/// Runs every (index, axiom) checker. Checker errors are recorded in the cell.
inline ComplianceMatrix run_compliance(const std::vector<std::string>& indices, const std::vector<std::string>& axioms,
                                       const CheckConfig& cfg) {
  if (indices.empty() || axioms.empty()) throw PcmError(ErrorCode::InvalidArgument, "empty index or axiom selection");
  ComplianceMatrix m{indices, axioms, {}, expected_matrix(),
                     RunMetadata{cfg.seed, cfg.trials, cfg.orders, cfg.tol, cfg.search_budget,
                                 cfg.ku_a3_measure == DeviationMeasure::Ratio ? "ratio" : "absolute",
                                 std::string(kToolkitVersion)}};
  for (const auto& idx : indices) {
    const IndexHandle& h = lookup(idx);
    for (const auto& ax : axioms) {
      if (!find_axiom(ax)) throw PcmError(ErrorCode::InvalidArgument, "unknown axiom '" + ax + "'");
      ComplianceCell cell{idx, ax, {}, std::nullopt};
      try {
        cell.verdict = run_check(h, ax, cfg);
      } catch (const std::exception& e) {
        cell.verdict = AxiomVerdict::inapplicable("checker error");
        cell.error = e.what();
      }
      m.cells.push_back(std::move(cell));
    }
  }
  return m;
}

// ---- diff -----------------------------------------------------------------

enum class Agreement { Agree, Disagree, Heuristic, Unknown };

inline const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "AGREE";
    case Agreement::Disagree: return "DISAGREE";
    case Agreement::Heuristic: return "HEURISTIC";
    case Agreement::Unknown: return "UNKNOWN";
  }
  return "?";
}

/// Satisfies pairs with NotFalsified and Dissatisfies with Falsified.
inline Agreement classify(VerdictKind kind, Expected expected) {
  if (kind == VerdictKind::Heuristic) return Agreement::Heuristic;
  if (expected == Expected::Unknown || kind == VerdictKind::Inapplicable) return Agreement::Unknown;
  const bool falsified = kind == VerdictKind::Falsified;
  return falsified == (expected == Expected::Dissatisfies) ? Agreement::Agree : Agreement::Disagree;
}

struct DiffCell {
  const ComplianceCell* cell;
  Expected expected;
  std::string source;
  Agreement agreement;
  std::string note;
};

struct DiffReport {
  std::vector<DiffCell> cells;
  std::map<Agreement, std::size_t> counts;

  bool has_disagree() const {
    const auto it = counts.find(Agreement::Disagree);
    return it != counts.end() && it->second > 0;
  }
};

inline DiffReport diff_report(const ComplianceMatrix& m) {
  DiffReport r;
  for (Agreement a : {Agreement::Agree, Agreement::Disagree, Agreement::Heuristic, Agreement::Unknown}) r.counts[a] = 0;
  for (const auto& c : m.cells) {
    const auto e = find_expectation(m.expectations, c.index, c.axiom);
    const Expected expected = e ? e->expected : Expected::Unknown;
    DiffCell d{&c, expected, e ? e->source : "not in the compliance table", classify(c.verdict.kind, expected), {}};
    if (c.error) {
      d.note = "checker error: " + *c.error;
    } else if (d.agreement == Agreement::Unknown && expected == Expected::Unknown) {
      d.note = "no expectation; observed " + std::string(to_string(c.verdict.kind));
    } else if (d.agreement == Agreement::Disagree) {
      d.note = c.verdict.witness ? "counterexample attached (" + c.verdict.witness->check + ")"
                                 : "no counterexample in " + std::to_string(c.verdict.trials_run) + " trials";
    }
    r.counts[d.agreement]++;
    r.cells.push_back(std::move(d));
  }
  return r;
}

inline constexpr std::string_view kReportCaveat =
    "AGREE on a Satisfies cell means only that no counterexample was found in the stated number of trials; "
    "it is not a proof. AGREE on a Dissatisfies cell is backed by a replayable counterexample.";

inline constexpr int kReportSchemaVersion = 1;

inline Json verdict_to_json(const AxiomVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["trials_run"] = v.trials_run;
  j["note"] = v.note;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

inline Json expectations_to_json(const std::vector<Expectation>& es) {
  Json arr = Json::array();
  for (const auto& e : es) arr.push_back(Json{{"index", e.index}, {"axiom", e.axiom}, {"expected", to_string(e.expected)}, {"source", e.source}});
  return arr;
}

inline std::vector<Expectation> expectations_from_json(const Json& arr) {
  std::vector<Expectation> es;
  try {
    for (const auto& j : arr)
      es.push_back({j.at("index").get<std::string>(), j.at("axiom").get<std::string>(),
                    expected_from_string(j.at("expected").get<std::string>()), j.at("source").get<std::string>()});
  } catch (const Json::exception& e) {
    throw PcmError(ErrorCode::ParseError, std::string("invalid expectations: ") + e.what());
  }
  return es;
}

/// Canonical machine record: fixed key order, no timestamps.
inline std::string machine_record(const ComplianceMatrix& m, const DiffReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["caveat"] = kReportCaveat;
  j["metadata"] = Json{{"toolkit_version", m.metadata.toolkit_version},
                       {"seed", m.metadata.seed},
                       {"trials", m.metadata.trials},
                       {"orders", m.metadata.orders},
                       {"tol", m.metadata.tol},
                       {"search_budget", m.metadata.search_budget},
                       {"ku_a3_measure", m.metadata.ku_a3_measure}};
  j["indices"] = m.indices;
  j["axioms"] = m.axioms;
  j["expectations"] = expectations_to_json(m.expectations);
  Json cells = Json::array();
  for (const auto& d : r.cells) {
    Json c{{"index", d.cell->index},
           {"axiom", d.cell->axiom},
           {"expected", to_string(d.expected)},
           {"agreement", to_string(d.agreement)},
           {"verdict", verdict_to_json(d.cell->verdict)}};
    if (d.cell->error) c["error"] = *d.cell->error;
    if (!d.note.empty()) c["note"] = d.note;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  Json summary;
  for (const auto& [a, n] : r.counts) summary[to_string(a)] = n;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

namespace detail {

inline std::string short_label(std::string_view axiom) {
  const auto info = find_axiom(axiom);
  return info ? std::string(info->label) : std::string(axiom);
}

inline std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace detail

/// Human-readable report: caveat, one summary row per index with a column
/// per axiomatic system, then one detail row per cell.
inline std::string markdown_report(const ComplianceMatrix& m, const DiffReport& r) {
  std::string out = "# Inconsistency index compliance report\n\n";
  out += "> " + std::string(kReportCaveat) + "\n\n";
  out += "seed " + std::to_string(m.metadata.seed) + ", " + std::to_string(m.metadata.trials) + " trials, orders {";
  for (std::size_t k = 0; k < m.metadata.orders.size(); ++k) out += (k ? "," : "") + std::to_string(m.metadata.orders[k]);
  out += "}, toolkit " + m.metadata.toolkit_version + "\n\n";
  out += "AGREE " + std::to_string(r.counts.at(Agreement::Agree)) + ", DISAGREE " + std::to_string(r.counts.at(Agreement::Disagree)) +
         ", HEURISTIC " + std::to_string(r.counts.at(Agreement::Heuristic)) + ", UNKNOWN " +
         std::to_string(r.counts.at(Agreement::Unknown)) + "\n\n";

  std::vector<std::string> systems;
  for (const auto& ax : m.axioms) {
    const auto info = find_axiom(ax);
    std::string sys = info ? std::string(info->system) : "?";
    if (ax == "bf6_transpose") sys = "BF A6";
    if (std::find(systems.begin(), systems.end(), sys) == systems.end()) systems.push_back(sys);
  }
  out += "## Summary\n\nF = falsified, N = no counterexample, H = heuristic probe, - = inapplicable. "
         "Disagreements with the table are marked with !.\n\n| index |";
  for (const auto& s : systems) out += " " + s + " |";
  out += "\n|---|";
  for (std::size_t k = 0; k < systems.size(); ++k) out += "---|";
  out += "\n";
  for (std::size_t i = 0; i < m.indices.size(); ++i) {
    out += "| " + m.indices[i] + " |";
    for (const auto& s : systems) {
      std::string text;
      for (std::size_t a = 0; a < m.axioms.size(); ++a) {
        const auto info = find_axiom(m.axioms[a]);
        std::string sys = info ? std::string(info->system) : "?";
        if (m.axioms[a] == "bf6_transpose") sys = "BF A6";
        if (sys != s) continue;
        const DiffCell& d = r.cells[i * m.axioms.size() + a];
        const char* mark = d.cell->verdict.kind == VerdictKind::Falsified      ? "F"
                           : d.cell->verdict.kind == VerdictKind::NotFalsified ? "N"
                           : d.cell->verdict.kind == VerdictKind::Heuristic    ? "H"
                                                                               : "-";
        if (!text.empty()) text += " ";
        text += detail::short_label(m.axioms[a]) + ":" + mark;
        if (d.agreement == Agreement::Disagree) text += "!";
      }
      out += " " + text + " |";
    }
    out += "\n";
  }

  out += "\n## Cells\n\n| index | axiom | expected | observed | trials | agreement | note |\n|---|---|---|---|---|---|---|\n";
  for (const auto& d : r.cells) {
    const auto& v = d.cell->verdict;
    std::string note = d.note.empty() ? v.note : d.note;
    if (note.empty() && v.witness) note = "counterexample: " + v.witness->relation;
    out += "| " + d.cell->index + " | " + d.cell->axiom + " | " + to_string(d.expected) + " | " + to_string(v.kind) +
           " | " + std::to_string(v.trials_run) + " | " + to_string(d.agreement) + " | " + detail::md_escape(note) + " |\n";
  }
  return out;
}

}  // namespace pcmtk
