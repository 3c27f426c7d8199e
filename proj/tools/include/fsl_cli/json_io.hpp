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


#ifndef FSL_CLI_JSON_IO_HPP
#define FSL_CLI_JSON_IO_HPP

#include <array>
#include <string>

#include "fsl/cross_ratios.hpp"
#include "fsl/types.hpp"
#include "fsl_cli/report.hpp"

namespace fsl::cli {

Json ToJson(Complex z);
Json ToJson(const Vector& v);
/// Rows of [re, im] pairs.
Json MatrixToJson(const Matrix& m);
/// Tuple as an array of vectors.
Json TupleToJson(const ConfigTuple& t);

/// Parsers throw UsageError naming the offending JSON path.
Complex ComplexFromJson(const Json& j, const std::string& path);
Vector VectorFromJson(const Json& j, const std::string& path);
Matrix MatrixFromJson(const Json& j, const std::string& path);

/// Parses text, reporting line and column of syntax errors.
Json ParseJson(const std::string& text, const std::string& source);

/// {"epsilon": 1, "d": 0, "r": 3, "points": [[[re, im], ...], ...]}
struct TupleInput {
  int epsilon = 1;
  int d = 0;
  int r = 2;
  std::vector<Vector> points;
};
TupleInput TupleInputFromJson(const Json& j);

}  // namespace fsl::cli

#endif  // FSL_CLI_JSON_IO_HPP
