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

#ifndef EZNET_GAUSSIAN_H_
#define EZNET_GAUSSIAN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "eznet/data_matrix.h"
#include "eznet/network_tests.h"

namespace eznet {

// Unbiased per-sample estimates of E, V, T derived from Wick's formula.
struct SampleMoments {
  double e = 0.0;
  double v = 0.0;
  double t = 0.0;
};

struct GaussianMoments {
  std::int64_t n = 0;
  std::int64_t p = 0;
  double e_hat = 0.0;
  double v_hat = 0.0;
  double t_hat = 0.0;
  std::vector<SampleMoments> per_sample;
};

struct GaussianVariance {
  double sigma2_hat = 0.0;
  std::vector<double> q_values;
};

// Moments of one observation. With power sums s_k = sum_j x_j^k:
//   sum_{j<l} x_j x_l               = (s1^2 - s2) / 2
//   sum_{j<l<m} (x_j^2 x_l x_m + ..) = (s1^2 s2 - 2 s1 s3 + 2 s4 - s2^2) / 2
//   sum_{j<l} x_j^2 x_l^2           = (s2^2 - s4) / 2
//   sum_{j<l<m} x_j^2 x_l^2 x_m^2   = (s2^3 - 3 s2 s4 + 2 s6) / 6
// Requires row.size() >= 3.
SampleMoments RowMoments(std::span<const double> row);

// Throws DomainError when d.cols() < 3 or d.rows() < 2.
GaussianMoments ComputeGaussianMoments(const DataMatrix& d);

// Q_i = T_i - 3 (V^2/E^3) V_i + 3 (V^3/E^4) E_i and their sample variance.
GaussianVariance ComputeGaussianVariance(const GaussianMoments& m);

// Derivatives of chi_ez = T - (V/E)^3 over the rows of `standardized` with
// respect to scaling column j by (1 + eps) and shifting it by eps.
struct ColumnSensitivity {
  std::vector<double> scale;
  std::vector<double> shift;
};

ColumnSensitivity ComputeColumnSensitivity(const DataMatrix& standardized,
                                           const GaussianMoments& m);

// Per-sample influence that estimating the column means and scales adds to
// Q_i when the data were standardized first:
//   -sum_j (scale_j (y_ij^2 - 1) / 2 + shift_j y_ij).
std::vector<double> StandardizationInfluence(const DataMatrix& standardized,
                                             const GaussianMoments& m);

// Sample variance of Q_i + StandardizationInfluence_i.
GaussianVariance ComputeStandardizedGaussianVariance(
    const DataMatrix& standardized, const GaussianMoments& m);

// sqrt(n) E_hat / sd(E_i).
double EHatZScore(const GaussianMoments& m);

struct GaussianTestOptions {
  bool standardize = true;
  // The scale adjustment is a linearization around E != 0; below this
  // |EHatZScore| the unadjusted sigma2_hat is used.
  double min_e_z_for_adjustment = 4.0;
  Alternative alternative = Alternative::kTwoSided;
};

// sqrt(n) (T - (V/E)^3) / sigma_hat against N(0, 1).
TestResult EzTestGaussian(const DataMatrix& d,
                          const GaussianTestOptions& options = {});

double TheoreticalDeltaGaussian(int k, double a, double b, std::int64_t n);

}  // namespace eznet

#endif  // EZNET_GAUSSIAN_H_
