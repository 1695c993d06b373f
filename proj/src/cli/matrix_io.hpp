#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psdapprox/bipartite.hpp"
#include "psdapprox/error.hpp"
#include "psdapprox/matrix.hpp"

namespace psdapprox::cli {

/// Malformed matrix document.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

/// {"rows": R, "cols": C, "data": [[re, im], ...], "dims": [m, n]?}
struct MatrixFile {
  MatrixC matrix;
  std::optional<BipartiteDims> dims;
};

MatrixFile matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const MatrixC& m, std::optional<BipartiteDims> dims = std::nullopt);

/// Parses one matrix document; `source` names the origin in error messages.
MatrixFile parse_matrix(std::istream& in, const std::string& source = "<stdin>");
MatrixFile parse_matrix(const std::string& text, const std::string& source);
/// Reads a file, or stdin when `path` is "-".
MatrixFile read_matrix_file(const std::string& path);

/// A JSON array of matrix documents (a single document is accepted as a
/// one-element list).
std::vector<MatrixFile> read_matrix_list(const std::string& path);

std::string serialize_matrix(const MatrixC& m, std::optional<BipartiteDims> dims = std::nullopt);

}  // namespace psdapprox::cli
