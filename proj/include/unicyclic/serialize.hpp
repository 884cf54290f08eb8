#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "unicyclic/rational_matrix.hpp"

namespace unicyclic {

/// {"rows":r,"cols":c,"entries":[["p/q",...],...]}
nlohmann::json matrix_to_json(const RationalMatrix& m);
/// Throws ParseError on malformed documents or ragged/mismatched entries.
RationalMatrix matrix_from_json(const nlohmann::json& doc);

/// One line per row, cells "p/q" separated by commas.
std::string matrix_to_csv(const RationalMatrix& m);
RationalMatrix matrix_from_csv(std::string_view text);

/// CSV block with a header row: the top-left cell names the matrix and the
/// remaining cells are column labels; every data row starts with its label.
std::string labelled_csv(std::string_view name, const RationalMatrix& m,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels);

}  // namespace unicyclic
