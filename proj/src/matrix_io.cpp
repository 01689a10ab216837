// Copyright 2026 The twirlent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twirlent/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace twirlent {

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
  require_square(m, "matrix_to_json");
  nlohmann::ordered_json out;
  out["dim"] = m.rows();
  auto entries = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  out["entries"] = std::move(entries);
  return out;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix JSON: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::invalid_argument("matrix JSON: 'dim' must be an integer");
  }
  const auto dim = j["dim"].get<long long>();
  if (dim <= 0) throw std::invalid_argument("matrix JSON: 'dim' must be positive");
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("matrix JSON: 'entries' must be an array");
  }
  const auto& entries = j["entries"];
  if (entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionError("matrix JSON: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries.size()));
  }
  ComplexMatrix m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++k) {
      const auto& e = entries[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw std::invalid_argument("matrix JSON: entry " + std::to_string(k) +
                                    " must be a [re, im] pair of numbers");
      }
      m(r, c) = {e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed matrix JSON in '" + path.string() + "': " + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace twirlent
