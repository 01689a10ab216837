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

#pragma once

#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "twirlent/linalg.hpp"

namespace twirlent {

/// Failure to read or write a file (as opposed to malformed content).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": d, "entries": [[re, im], ...]} in row-major order. Extra keys are
/// ignored on read, so richer documents that embed a matrix still parse.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace twirlent
