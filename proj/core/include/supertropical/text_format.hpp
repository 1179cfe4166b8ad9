// Copyright 2026 The supertropical Authors
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

#ifndef SUPERTROPICAL_TEXT_FORMAT_HPP
#define SUPERTROPICAL_TEXT_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "supertropical/errors.hpp"
#include "supertropical/matrix.hpp"

namespace supertropical {

/// Text grammar: `-inf` | RAT | RAT `v`, RAT = [+-]digits[/digits].
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws ParseError with line 1 and the given column.
Scalar parse_scalar(std::string_view token, std::size_t line = 1, std::size_t column = 1);
std::string print_scalar(const Scalar& s);

/// One row per line, whitespace-separated entries; `#` comment lines and blank lines are skipped.
Mat parse_matrix(std::string_view text);
/// Exactly one row.
Vec parse_vector(std::string_view text);
std::string print_matrix(const Mat& m);
std::string print_vector(const Vec& v);

}  // namespace supertropical

#endif  // SUPERTROPICAL_TEXT_FORMAT_HPP
