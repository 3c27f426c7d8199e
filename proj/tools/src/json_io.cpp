// Copyright 2026 The fsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fsl_cli/json_io.hpp"

#include <cmath>

namespace fsl::cli {

Json ToJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Json ToJson(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(ToJson(v(i)));
  return a;
}

Json MatrixToJson(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(ToJson(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json TupleToJson(const ConfigTuple& t) {
  Json a = Json::array();
  for (const Vector& v : t.points()) a.push_back(ToJson(v));
  return a;
}

Complex ComplexFromJson(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw UsageError(path + ": expected [re, im]");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw UsageError(path + ": non-finite value");
  }
  return z;
}

Vector VectorFromJson(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw UsageError(path + ": expected a vector");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        ComplexFromJson(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Matrix MatrixFromJson(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw UsageError(path + ": expected rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    Vector row = VectorFromJson(j[i], row_path);
    if (static_cast<std::size_t>(row.size()) != cols) {
      throw UsageError(row_path + ": ragged row");
    }
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

Json ParseJson(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + e.what());
  }
}

namespace {

int IntField(const Json& j, const char* key) {
  if (!j.contains(key)) throw UsageError(std::string("$.") + key + ": missing");
  const Json& v = j[key];
  if (!v.is_number_integer()) {
    throw UsageError(std::string("$.") + key + ": expected an integer");
  }
  return v.get<int>();
}

}  // namespace

TupleInput TupleInputFromJson(const Json& j) {
  if (!j.is_object()) throw UsageError("$: expected an object");
  TupleInput in;
  in.epsilon = IntField(j, "epsilon");
  in.d = IntField(j, "d");
  in.r = IntField(j, "r");
  if (!j.contains("points") || !j["points"].is_array()) {
    throw UsageError("$.points: expected an array of vectors");
  }
  const Json& pts = j["points"];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    in.points.push_back(VectorFromJson(pts[i], "$.points[" + std::to_string(i) + "]"));
  }
  return in;
}

}  // namespace fsl::cli
