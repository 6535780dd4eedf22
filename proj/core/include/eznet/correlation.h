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

#ifndef EZNET_CORRELATION_H_
#define EZNET_CORRELATION_H_

#include <span>
#include <string_view>
#include <vector>

#include "eznet/data_matrix.h"
#include "eznet/graph.h"

namespace eznet {

enum class CorrelationMethod { kPearson, kSpearman };

CorrelationMethod ParseCorrelationMethod(std::string_view name);

// 1-based ranks with ties sharing their average rank.
std::vector<double> AverageRanks(std::span<const double> values);

double PearsonCorrelation(std::span<const double> x, std::span<const double> y);

// Graph on d.cols() nodes with edge {i, j} iff corr(col i, col j) > threshold.
// Requires d.rows() >= 3, threshold in (-1, 1) and no constant column.
Graph CorrelationGraph(const DataMatrix& d, double threshold,
                       CorrelationMethod method = CorrelationMethod::kSpearman);

}  // namespace eznet

#endif  // EZNET_CORRELATION_H_
