// Copyright 2026 The eznet Authors.
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

#include "eznet/data_matrix.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "eznet/error.h"

namespace eznet {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitCommas(std::string_view s) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    cells.push_back(Trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool ParseDouble(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace

DataMatrix::DataMatrix(std::int64_t rows, std::int64_t cols,
                       std::vector<double> values,
                       std::vector<std::string> column_names)
    : rows_(rows),
      cols_(cols),
      values_(std::move(values)),
      column_names_(std::move(column_names)) {
  if (rows < 0 || cols < 0 ||
      static_cast<std::int64_t>(values_.size()) != rows * cols) {
    throw DomainError("data matrix size does not match its dimensions");
  }
  if (!column_names_.empty() &&
      static_cast<std::int64_t>(column_names_.size()) != cols) {
    throw DomainError("column name count does not match column count");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("non-finite entry at row " +
                        std::to_string(static_cast<std::int64_t>(i) / cols) +
                        ", column " +
                        std::to_string(static_cast<std::int64_t>(i) % cols));
    }
  }
}

std::vector<double> DataMatrix::column(std::int64_t j) const {
  std::vector<double> out(static_cast<std::size_t>(rows_));
  for (std::int64_t i = 0; i < rows_; ++i) {
    out[static_cast<std::size_t>(i)] = (*this)(i, j);
  }
  return out;
}

std::string DataMatrix::column_label(std::int64_t j) const {
  if (!column_names_.empty()) return column_names_[static_cast<std::size_t>(j)];
  return "x" + std::to_string(j);
}

DataMatrix ReadCsv(std::istream& in) {
  std::string line;
  std::int64_t line_no = 0;
  std::int64_t cols = -1;
  std::vector<double> values;
  std::vector<std::string> names;
  std::int64_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty()) continue;
    const auto cells = SplitCommas(body);
    if (cols < 0) {
      cols = static_cast<std::int64_t>(cells.size());
      double probe = 0.0;
      if (!ParseDouble(cells.front(), probe)) {
        for (auto cell : cells) names.emplace_back(cell);
        continue;
      }
    }
    if (static_cast<std::int64_t>(cells.size()) != cols) {
      throw ParseError(line_no, "expected " + std::to_string(cols) +
                                    " fields, got " +
                                    std::to_string(cells.size()));
    }
    for (auto cell : cells) {
      double v = 0.0;
      if (!ParseDouble(cell, v) || !std::isfinite(v)) {
        throw ParseError(line_no, "malformed value '" + std::string(cell) + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (cols < 0) cols = 0;
  return DataMatrix(rows, cols, std::move(values), std::move(names));
}

DataMatrix ReadCsv(const std::string& text) {
  std::istringstream in(text);
  return ReadCsv(in);
}

DataMatrix ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return ReadCsv(in);
}

void WriteCsv(const DataMatrix& d, std::ostream& out) {
  for (std::int64_t j = 0; j < d.cols(); ++j) {
    if (j > 0) out << ',';
    out << d.column_label(j);
  }
  out << '\n';
  char buf[32];
  for (std::int64_t i = 0; i < d.rows(); ++i) {
    for (std::int64_t j = 0; j < d.cols(); ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", d(i, j));
      out << buf;
    }
    out << '\n';
  }
}

DataMatrix StandardizeColumns(const DataMatrix& d) {
  if (d.rows() < 2) throw DomainError("standardization needs at least 2 rows");
  const auto n = d.rows();
  const auto p = d.cols();
  std::vector<double> out(d.values().begin(), d.values().end());
  for (std::int64_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (std::int64_t i = 0; i < n; ++i) mean += d(i, j);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double c = d(i, j) - mean;
      ss += c * c;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
      throw DomainError("column '" + d.column_label(j) + "' is constant");
    }
    for (std::int64_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i * p + j)] = (d(i, j) - mean) / sd;
    }
  }
  return DataMatrix(n, p, std::move(out), d.column_names());
}

}  // namespace eznet
