#include "cli/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace psdapprox::cli {

using nlohmann::json;

namespace {

std::size_t read_size(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw InputError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double read_component(const json& v, std::size_t index, const char* part) {
  if (!v.is_number()) {
    throw InputError("data[" + std::to_string(index) + "]: " + part + " part is not a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw InputError("data[" + std::to_string(index) + "]: " + part + " part is not finite");
  }
  return x;
}

json parse_json(std::istream& in, const std::string& source) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  } catch (const json::exception& e) {
    // e.g. a number literal outside the double range
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

}  // namespace

MatrixFile matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("matrix document must be a JSON object");
  const std::size_t rows = read_size(doc, "rows");
  const std::size_t cols = read_size(doc, "cols");
  if (!doc.contains("data") || !doc.at("data").is_array()) {
    throw InputError("missing array field \"data\"");
  }
  const json& data = doc.at("data");
  const std::size_t expected = rows * cols;
  if (data.size() < expected) {
    throw InputError("data has " + std::to_string(data.size()) + " entries but " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                     std::to_string(expected) + "; first missing index is " +
                     std::to_string(data.size()));
  }
  if (data.size() > expected) {
    throw InputError("data has " + std::to_string(data.size()) + " entries but " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                     std::to_string(expected) + "; first surplus index is " +
                     std::to_string(expected));
  }

  std::vector<Complex> entries;
  entries.reserve(expected);
  for (std::size_t k = 0; k < expected; ++k) {
    const json& pair = data[k];
    if (!pair.is_array() || pair.size() != 2) {
      throw InputError("data[" + std::to_string(k) + "] must be a [re, im] pair");
    }
    entries.emplace_back(read_component(pair[0], k, "real"), read_component(pair[1], k, "imaginary"));
  }

  MatrixFile out{MatrixC(rows, cols, std::move(entries)), std::nullopt};
  if (doc.contains("dims")) {
    const json& d = doc.at("dims");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer() ||
        d[0].get<long long>() <= 0 || d[1].get<long long>() <= 0) {
      throw InputError("\"dims\" must be a pair of positive integers");
    }
    const BipartiteDims dims{d[0].get<std::size_t>(), d[1].get<std::size_t>()};
    if (rows != cols || dims.total() != rows) {
      throw InputError("\"dims\" " + std::to_string(dims.dim_a) + "x" +
                       std::to_string(dims.dim_b) + " does not match a " + std::to_string(rows) +
                       "x" + std::to_string(cols) + " matrix");
    }
    out.dims = dims;
  }
  return out;
}

json matrix_to_json(const MatrixC& m, std::optional<BipartiteDims> dims) {
  json data = json::array();
  for (const Complex& e : m.entries()) data.push_back(json::array({e.real(), e.imag()}));
  json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
  if (dims) doc["dims"] = json::array({dims->dim_a, dims->dim_b});
  return doc;
}

MatrixFile parse_matrix(std::istream& in, const std::string& source) {
  const json doc = parse_json(in, source);
  try {
    return matrix_from_json(doc);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

MatrixFile parse_matrix(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_matrix(in, source);
}

MatrixFile read_matrix_file(const std::string& path) {
  if (path == "-") return parse_matrix(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_matrix(in, path);
}

std::vector<MatrixFile> read_matrix_list(const std::string& path) {
  json doc;
  if (path == "-") {
    doc = parse_json(std::cin, "<stdin>");
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    doc = parse_json(in, path);
  }
  std::vector<MatrixFile> out;
  try {
    if (doc.is_array()) {
      if (doc.empty()) throw InputError("matrix list is empty");
      for (std::size_t k = 0; k < doc.size(); ++k) {
        try {
          out.push_back(matrix_from_json(doc[k]));
        } catch (const InputError& e) {
          throw InputError("element " + std::to_string(k) + ": " + e.what());
        }
      }
    } else {
      out.push_back(matrix_from_json(doc));
    }
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  return out;
}

std::string serialize_matrix(const MatrixC& m, std::optional<BipartiteDims> dims) {
  return matrix_to_json(m, dims).dump();
}

}  // namespace psdapprox::cli
