#pragma once

// Matrix documents, CSV import, witness serialization and atomic file output.
//
// Matrix document: {"n": 3, "upper": [a12, a13, a23], "name": "..."}; name is
// optional. Doubles are written in shortest round-trip form.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pcmtk/pcm.hpp"
#include "pcmtk/verdict.hpp"

namespace pcmtk {

using Json = nlohmann::ordered_json;

struct MatrixDocument {
  Pcm matrix;
  std::optional<std::string> name;
};

inline Json matrix_to_json(const Pcm& a, const std::optional<std::string>& name = std::nullopt) {
  Json j;
  j["n"] = a.order();
  j["upper"] = std::vector<double>(a.upper().begin(), a.upper().end());
  if (name) j["name"] = *name;
  return j;
}

inline MatrixDocument matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("upper"))
    throw PcmError(ErrorCode::ParseError, "matrix document needs \"n\" and \"upper\"");
  if (!j["n"].is_number_unsigned()) throw PcmError(ErrorCode::ParseError, "\"n\" must be a non-negative integer");
  if (!j["upper"].is_array()) throw PcmError(ErrorCode::ParseError, "\"upper\" must be an array");
  std::vector<double> upper;
  for (const auto& x : j["upper"]) {
    if (!x.is_number()) throw PcmError(ErrorCode::ParseError, "\"upper\" entries must be numbers");
    upper.push_back(x.get<double>());
  }
  MatrixDocument doc{Pcm(j["n"].get<std::size_t>(), std::move(upper)), std::nullopt};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw PcmError(ErrorCode::ParseError, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

inline MatrixDocument parse_matrix_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PcmError(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

/// n lines of n comma-separated decimals. Reciprocity is checked at 1e-12
/// and only the upper triangle is kept.
inline Pcm parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw PcmError(ErrorCode::ParseError, "not a number: '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return new_pcm(rows, 1e-12);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PcmError(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON document, or CSV when the extension is .csv.
inline MatrixDocument read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".csv") return MatrixDocument{parse_csv_matrix(text), std::nullopt};
  return parse_matrix_document(text);
}

/// Writes to a sibling temporary file and renames it over `path`.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PcmError(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw PcmError(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline Json witness_to_json(const Witness& w) {
  Json j;
  j["check"] = w.check;
  j["relation"] = w.relation;
  Json ms = Json::array();
  for (const auto& m : w.matrices) {
    Json e = matrix_to_json(m.matrix);
    e["role"] = m.role;
    ms.push_back(std::move(e));
  }
  j["matrices"] = std::move(ms);
  j["values"] = w.values;
  j["params"] = w.params;
  return j;
}

inline Witness witness_from_json(const Json& j) {
  try {
    Witness w{j.at("check").get<std::string>(), j.at("relation").get<std::string>(), {}, {}, {}};
    for (const auto& m : j.at("matrices")) w.matrices.push_back({m.at("role").get<std::string>(), matrix_from_json(m).matrix});
    w.values = j.at("values").get<std::vector<double>>();
    w.params = j.at("params").get<std::vector<double>>();
    return w;
  } catch (const Json::exception& e) {
    throw PcmError(ErrorCode::ParseError, std::string("invalid witness: ") + e.what());
  }
}

}  // namespace pcmtk
