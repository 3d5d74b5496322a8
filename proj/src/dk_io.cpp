#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "steinermat/dk.hpp"
#include "steinermat/error.hpp"

namespace steinermat {

namespace {

using json = nlohmann::ordered_json;

json labels_json(const std::vector<VertexSet>& labels) {
  json out = json::array();
  for (const VertexSet& s : labels) {
    out.push_back(std::vector<int>(s.labels().begin(), s.labels().end()));
  }
  return out;
}

std::vector<VertexSet> labels_from_json(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& item : j) out.emplace_back(item.get<std::vector<int>>());
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = line.find(sep, start);
    out.push_back(line.substr(start, at == std::string_view::npos ? line.npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::string export_csv(const LabeledMatrix& m) {
  std::ostringstream os;
  os << 'X';
  for (const VertexSet& c : m.col_labels()) os << ',' << c.to_string();
  os << '\n';
  for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
    os << m.row_labels()[i].to_string();
    for (const Rational& x : m.matrix().row(i)) os << ',' << x.to_string();
    os << '\n';
  }
  return os.str();
}

std::string export_json(const LabeledMatrix& m) {
  json out;
  if (m.row_labels() == m.col_labels()) {
    out["labels"] = labels_json(m.row_labels());
  } else {
    out["row_labels"] = labels_json(m.row_labels());
    out["col_labels"] = labels_json(m.col_labels());
  }
  json entries = json::array();
  for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
    json row = json::array();
    for (const Rational& x : m.matrix().row(i)) row.push_back(x.to_string());
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out.dump() + "\n";
}

LabeledMatrix import_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) throw Error("labeled CSV needs a header and at least one row");
  auto header = split(lines[0], ',');
  if (header.size() < 2 || header[0] != "X") throw Error("labeled CSV header must start with 'X'");
  std::vector<VertexSet> cols;
  for (std::size_t j = 1; j < header.size(); ++j) cols.push_back(VertexSet::parse(header[j]));
  std::vector<VertexSet> rows;
  std::vector<Rational> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split(lines[i], ',');
    if (cells.size() != header.size()) throw Error("ragged labeled CSV row " + std::to_string(i));
    rows.push_back(VertexSet::parse(cells[0]));
    for (std::size_t j = 1; j < cells.size(); ++j) entries.push_back(Rational::parse(cells[j]));
  }
  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  return LabeledMatrix(RationalMatrix(nr, nc, std::move(entries)), std::move(rows), std::move(cols));
}

LabeledMatrix import_json_document(const json& j);

LabeledMatrix import_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  try {
    return import_json_document(j);
  } catch (const json::exception& e) {
    throw Error(std::string("unexpected JSON layout: ") + e.what());
  }
}

LabeledMatrix import_json_document(const json& j) {
  std::vector<VertexSet> rows;
  std::vector<VertexSet> cols;
  if (j.contains("labels")) {
    rows = labels_from_json(j.at("labels"));
    cols = rows;
  } else {
    rows = labels_from_json(j.at("row_labels"));
    cols = labels_from_json(j.at("col_labels"));
  }
  std::vector<Rational> entries;
  for (const auto& row : j.at("entries")) {
    if (row.size() != cols.size()) throw Error("ragged JSON entries");
    for (const auto& x : row) entries.push_back(Rational::parse(x.get<std::string>()));
  }
  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  return LabeledMatrix(RationalMatrix(nr, nc, std::move(entries)), std::move(rows), std::move(cols));
}

}  // namespace

std::string export_labeled(const LabeledMatrix& m, ExportFormat format) {
  return format == ExportFormat::kCsv ? export_csv(m) : export_json(m);
}

LabeledMatrix import_labeled(std::string_view text, ExportFormat format) {
  return format == ExportFormat::kCsv ? import_csv(text) : import_json(text);
}

}  // namespace steinermat
