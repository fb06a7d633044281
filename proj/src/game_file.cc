// Copyright 2026 The TPASS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tpass/game_file.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tpass/errors.h"

namespace tpass {
namespace {

using Json = nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool ParseWhole(std::string_view s, T& value) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc() && ptr == end;
}

double NumberAt(const Json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return ParseScalar(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + field + "': " + e.what());
    }
  }
  throw InputError("field '" + field + "': expected a number or a numeric " +
                   "string, got " + value.type_name());
}

const Json& Member(const Json& object, const std::string& field) {
  const auto it = object.find(field);
  if (it == object.end()) {
    throw InputError("missing field '" + field + "'");
  }
  return *it;
}

Vector VectorAt(const Json& object, const std::string& field) {
  const Json& value = Member(object, field);
  if (!value.is_array() || value.empty()) {
    throw InputError("field '" + field + "': expected a non-empty array");
  }
  Vector out(value.size());
  for (size_t k = 0; k < value.size(); ++k) {
    out[k] = NumberAt(value[k], field + "[" + std::to_string(k + 1) + "]");
  }
  return out;
}

Matrix MatrixAt(const Json& object, const std::string& field) {
  const Json& value = Member(object, field);
  if (!value.is_array() || value.empty()) {
    throw InputError("field '" + field +
                     "': expected a non-empty array of rows");
  }
  const size_t rows = value.size();
  size_t cols = 0;
  for (size_t i = 0; i < rows; ++i) {
    const Json& row = value[i];
    const std::string where = field + " row " + std::to_string(i + 1);
    if (!row.is_array() || row.empty()) {
      throw InputError("field '" + where + "': expected a non-empty array");
    }
    if (i == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw InputError("field '" + where + "': has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    }
  }
  Matrix out(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      out(i, j) = NumberAt(value[i][j], field + "[" + std::to_string(i + 1) +
                                            "][" + std::to_string(j + 1) + "]");
    }
  }
  return out;
}

std::string Number(double v) { return Json(v).dump(); }

std::string Row(const Vector& v) {
  std::string out = "[";
  for (int k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += Number(v[k]);
  }
  return out + "]";
}

std::string Rows(const Matrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ",\n        ";
    out += Row(m.row(i).transpose());
  }
  return out + "]";
}

}  // namespace

double ParseScalar(std::string_view text) {
  const std::string_view s = Trim(text);
  const std::string shown(text);
  if (s.empty()) throw InputError("empty number");
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    long long numerator = 0;
    long long denominator = 0;
    if (!ParseWhole(Trim(s.substr(0, slash)), numerator) ||
        !ParseWhole(Trim(s.substr(slash + 1)), denominator)) {
      throw InputError("malformed fraction '" + shown + "'");
    }
    if (denominator == 0) {
      throw InputError("zero denominator in '" + shown + "'");
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  double value = 0.0;
  if (!ParseWhole(s, value) || !std::isfinite(value)) {
    throw InputError("malformed number '" + shown + "'");
  }
  return value;
}

std::vector<double> ParseScalarList(std::string_view text) {
  std::vector<double> values;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    values.push_back(ParseScalar(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

GameFile ParseGameFile(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("game file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("game file must be a JSON object");
  const Json& kind = Member(doc, "kind");
  if (!kind.is_string()) {
    throw InputError("field 'kind': expected \"tpass\" or \"bimatrix\"");
  }
  const std::string kind_name = kind.get<std::string>();
  if (kind_name == "tpass") {
    Matrix kernel = MatrixAt(doc, "A");
    Vector row_bonus = VectorAt(doc, "pi");
    Vector col_bonus = VectorAt(doc, "rho");
    if (row_bonus.size() != kernel.rows()) {
      throw InputError("field 'pi': has " + std::to_string(row_bonus.size()) +
                       " entries but A has " + std::to_string(kernel.rows()) +
                       " rows");
    }
    if (col_bonus.size() != kernel.cols()) {
      throw InputError("field 'rho': has " + std::to_string(col_bonus.size()) +
                       " entries but A has " + std::to_string(kernel.cols()) +
                       " columns");
    }
    return TpassGame(std::move(kernel), std::move(row_bonus),
                     std::move(col_bonus));
  }
  if (kind_name == "bimatrix") {
    Matrix row_payoffs = MatrixAt(doc, "B");
    Matrix col_payoffs = MatrixAt(doc, "C");
    if (row_payoffs.rows() != col_payoffs.rows() ||
        row_payoffs.cols() != col_payoffs.cols()) {
      throw InputError("field 'C': shape differs from field 'B'");
    }
    return BimatrixGame(std::move(row_payoffs), std::move(col_payoffs));
  }
  throw InputError("field 'kind': unknown kind '" + kind_name +
                   "' (expected \"tpass\" or \"bimatrix\")");
}

GameFile LoadGameFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGameFile(buffer.str());
}

std::string SerializeGame(const TpassGame& game) {
  return "{\n  \"kind\": \"tpass\",\n  \"A\": " + Rows(game.kernel()) +
         ",\n  \"pi\": " + Row(game.row_bonus()) +
         ",\n  \"rho\": " + Row(game.col_bonus()) + "\n}\n";
}

std::string SerializeGame(const BimatrixGame& game) {
  return "{\n  \"kind\": \"bimatrix\",\n  \"B\": " + Rows(game.row_payoffs()) +
         ",\n  \"C\": " + Rows(game.col_payoffs()) + "\n}\n";
}

}  // namespace tpass
