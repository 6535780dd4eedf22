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

#ifndef EZNET_DATA_MATRIX_H_
#define EZNET_DATA_MATRIX_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace eznet {

// Row-major n x p matrix of finite observations; row i is one sample.
class DataMatrix {
 public:
  DataMatrix() = default;
  // Throws DomainError on a size mismatch or any non-finite entry.
  DataMatrix(std::int64_t rows, std::int64_t cols, std::vector<double> values,
             std::vector<std::string> column_names = {});

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  double operator()(std::int64_t i, std::int64_t j) const {
    return values_[static_cast<std::size_t>(i * cols_ + j)];
  }
  std::span<const double> row(std::int64_t i) const {
    return {values_.data() + i * cols_, static_cast<std::size_t>(cols_)};
  }
  std::vector<double> column(std::int64_t j) const;
  std::span<const double> values() const { return values_; }

  // Empty when the source had no header; otherwise one name per column.
  const std::vector<std::string>& column_names() const { return column_names_; }
  std::string column_label(std::int64_t j) const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::string> column_names_;
};

// Comma-separated decimals, one observation per line. The first row is a
// header when its first cell does not parse as a number. Throws ParseError.
DataMatrix ReadCsv(std::istream& in);
DataMatrix ReadCsv(const std::string& text);
DataMatrix ReadCsvFile(const std::string& path);

// Header row (column names, or x0..x{p-1}) then rows at 17 significant digits.
void WriteCsv(const DataMatrix& d, std::ostream& out);

// Centers each column and scales it to unit sample variance (divisor n-1).
// Throws DomainError naming the first constant column.
DataMatrix StandardizeColumns(const DataMatrix& d);

}  // namespace eznet

#endif  // EZNET_DATA_MATRIX_H_
