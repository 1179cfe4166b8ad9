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

#include "supertropical/text_format.hpp"

#include <stdexcept>

namespace supertropical {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

Scalar parse_scalar(std::string_view token, std::size_t line, std::size_t column) {
  if (token == "-inf" || token == "-infv") return Scalar::zero();
  bool ghost = !token.empty() && token.back() == 'v';
  std::string_view body = ghost ? token.substr(0, token.size() - 1) : token;
  try {
    Rational q = Rational::parse(body);
    return ghost ? Scalar::ghost(q) : Scalar::tangible(q);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, column, "bad scalar '" + std::string(token) + "'");
  }
}

std::string print_scalar(const Scalar& s) { return s.to_string(); }

Mat parse_matrix(std::string_view text) {
  std::vector<Vec> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      Vec row;
      std::size_t i = first;
      while (i < line.size()) {
        std::size_t stop = line.find_first_of(" \t", i);
        if (stop == std::string_view::npos) stop = line.size();
        row.push_back(parse_scalar(line.substr(i, stop - i), line_no, i + 1));
        i = line.find_first_not_of(" \t", stop);
        if (i == std::string_view::npos) break;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError(line_no, 1,
                         "expected " + std::to_string(rows.front().size()) + " entries, got " + std::to_string(row.size()));
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (rows.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "no rows");
  return Mat::from_rows(rows);
}

Vec parse_vector(std::string_view text) {
  Mat m = parse_matrix(text);
  if (m.rows() != 1) throw ParseError(1, 1, "expected a single row");
  return m.row(0);
}

std::string print_vector(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += print_scalar(v[i]);
  }
  return out;
}

std::string print_matrix(const Mat& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += print_vector(m.row(i)) + "\n";
  return out;
}

}  // namespace supertropical
