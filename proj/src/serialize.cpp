#include "unicyclic/serialize.hpp"

#include <stdexcept>

#include "unicyclic/errors.hpp"

namespace unicyclic {

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& x : m.row(i)) row.push_back(x.str());
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const nlohmann::json& doc) {
  try {
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    const auto& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
      throw ParseError("matrix JSON: 'entries' must hold " + std::to_string(rows) + " rows", 0);
    }
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& row = entries[i];
      if (!row.is_array() || row.size() != cols) {
        throw ParseError("matrix JSON: row " + std::to_string(i + 1) + " must hold " +
                             std::to_string(cols) + " entries",
                         0);
      }
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& cell = row[j];
        m(i, j) = cell.is_string() ? Rational::parse(cell.get<std::string>())
                                   : Rational::parse(cell.dump());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what(), 0);
  }
}

std::string matrix_to_csv(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

RationalMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<Rational> row;
    while (true) {
      const auto comma = line.find(',');
      try {
        row.push_back(Rational::parse(line.substr(0, comma)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged CSV row", line_no);
    }
    rows.push_back(std::move(row));
  }
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = std::move(rows[i][j]);
  }
  return m;
}

std::string labelled_csv(std::string_view name, const RationalMatrix& m,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  if (row_labels.size() != m.rows() || col_labels.size() != m.cols()) {
    throw DimensionError("labelled_csv: label count does not match matrix shape");
  }
  std::string out(name);
  for (const auto& c : col_labels) out += "," + c;
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += row_labels[i];
    for (const Rational& x : m.row(i)) out += "," + x.str();
    out += '\n';
  }
  return out;
}

}  // namespace unicyclic
