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

#include "eznet/model_params.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "eznet/error.h"

namespace eznet {
namespace {

constexpr double kSecondMomentTolerance = 1e-12;

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double ParseNumber(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + token + "' in " + context);
  }
}

}  // namespace

WeightDistribution WeightDistribution::ConstantOne() { return {}; }

WeightDistribution WeightDistribution::TwoPoint(double w_lo, double w_hi,
                                                double prob_hi) {
  if (!(w_lo >= 0.0) || !(w_hi >= 0.0)) {
    throw DomainError("two-point weights must be non-negative");
  }
  if (!(prob_hi >= 0.0 && prob_hi <= 1.0)) {
    throw DomainError("two-point prob_hi must lie in [0, 1]");
  }
  const double m2 = prob_hi * w_hi * w_hi + (1.0 - prob_hi) * w_lo * w_lo;
  if (std::abs(m2 - 1.0) > kSecondMomentTolerance) {
    throw DomainError("two-point weights violate E W^2 = 1 (got " + Num(m2) +
                      ")");
  }
  WeightDistribution w;
  w.kind_ = Kind::kTwoPoint;
  w.w_lo_ = w_lo;
  w.w_hi_ = w_hi;
  w.prob_hi_ = prob_hi;
  return w;
}

WeightDistribution WeightDistribution::TwoPointSolved(double w_lo,
                                                      double prob_hi) {
  if (!(prob_hi > 0.0 && prob_hi <= 1.0)) {
    throw DomainError("two-point prob_hi must lie in (0, 1] to solve for w_hi");
  }
  const double rest = 1.0 - (1.0 - prob_hi) * w_lo * w_lo;
  if (!(rest >= 0.0)) {
    throw DomainError("no w_hi satisfies E W^2 = 1 for this w_lo and prob_hi");
  }
  const double w_hi = std::sqrt(rest / prob_hi);
  // Re-validate with the solved value; rounding stays far below 1e-12.
  return TwoPoint(w_lo, w_hi, prob_hi);
}

WeightDistribution WeightDistribution::ScaledLognormal(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("lognormal sigma must be finite and non-negative");
  }
  WeightDistribution w;
  w.kind_ = Kind::kScaledLognormal;
  w.sigma_ = sigma;
  return w;
}

double WeightDistribution::Draw(Rng& rng) const {
  switch (kind_) {
    case Kind::kConstantOne:
      return 1.0;
    case Kind::kTwoPoint:
      return rng.Uniform() < prob_hi_ ? w_hi_ : w_lo_;
    case Kind::kScaledLognormal:
      return std::exp(sigma_ * rng.Normal() - sigma_ * sigma_);
  }
  return 1.0;
}

double WeightDistribution::Mean() const {
  switch (kind_) {
    case Kind::kConstantOne:
      return 1.0;
    case Kind::kTwoPoint:
      return prob_hi_ * w_hi_ + (1.0 - prob_hi_) * w_lo_;
    case Kind::kScaledLognormal:
      return std::exp(-0.5 * sigma_ * sigma_);
  }
  return 1.0;
}

double WeightDistribution::SecondMoment() const {
  if (kind_ == Kind::kTwoPoint) {
    return prob_hi_ * w_hi_ * w_hi_ + (1.0 - prob_hi_) * w_lo_ * w_lo_;
  }
  return 1.0;
}

double WeightDistribution::FourthMoment() const {
  switch (kind_) {
    case Kind::kConstantOne:
      return 1.0;
    case Kind::kTwoPoint:
      return prob_hi_ * std::pow(w_hi_, 4) + (1.0 - prob_hi_) * std::pow(w_lo_, 4);
    case Kind::kScaledLognormal:
      return std::exp(4.0 * sigma_ * sigma_);
  }
  return 1.0;
}

bool WeightDistribution::IsConstant() const {
  switch (kind_) {
    case Kind::kConstantOne:
      return true;
    case Kind::kTwoPoint:
      return prob_hi_ == 0.0 || prob_hi_ == 1.0 || w_lo_ == w_hi_;
    case Kind::kScaledLognormal:
      return sigma_ == 0.0;
  }
  return true;
}

std::string WeightDistribution::Describe() const {
  switch (kind_) {
    case Kind::kConstantOne:
      return "const";
    case Kind::kTwoPoint:
      return "two-point:" + Num(w_lo_) + "," + Num(w_hi_) + "," + Num(prob_hi_);
    case Kind::kScaledLognormal:
      return "lognormal:" + Num(sigma_);
  }
  return "const";
}

WeightDistribution ParseWeightDistribution(const std::string& text) {
  if (text.empty() || text == "const" || text == "constant") {
    return WeightDistribution::ConstantOne();
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  std::vector<std::string> fields;
  std::stringstream ss(args);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!args.empty() && args.back() == ',') fields.emplace_back();

  if (kind == "two-point") {
    if (fields.size() != 3) {
      throw DomainError("two-point expects W_LO,W_HI,PROB_HI");
    }
    const double w_lo = ParseNumber(fields[0], text);
    const double prob_hi = ParseNumber(fields[2], text);
    if (fields[1].empty()) return WeightDistribution::TwoPointSolved(w_lo, prob_hi);
    return WeightDistribution::TwoPoint(w_lo, ParseNumber(fields[1], text),
                                        prob_hi);
  }
  if (kind == "lognormal") {
    if (fields.size() != 1) throw DomainError("lognormal expects SIGMA");
    return WeightDistribution::ScaledLognormal(ParseNumber(fields[0], text));
  }
  throw DomainError("unknown weight distribution '" + text + "'");
}

void DcbmParams::Validate() const {
  if (n < 3) throw DomainError("DCBM needs n >= 3");
  if (k < 1) throw DomainError("DCBM needs k >= 1");
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw DomainError("DCBM connectivities a and b must lie in [0, 1]");
  }
}

void NeighborhoodParams::Validate() const {
  Ambient().Validate();
  if (r < 1 || r > k) throw DomainError("neighborhood model needs 1 <= r <= k");
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("ego attachment probability must lie in (0, 1]");
  }
}

PopulationDensities DcbmPopulationDensities(int k, double a, double b,
                                            double mean_w) {
  const double kk = static_cast<double>(k);
  const double mix = a / kk + (kk - 1.0) / kk * b;
  PopulationDensities pd;
  pd.e = mean_w * mean_w * mix;
  pd.v = mean_w * mean_w * mix * mix;
  pd.t = (a * a * a + 3.0 * (kk - 1.0) * a * b * b +
          (kk - 1.0) * (kk - 2.0) * b * b * b) /
         (kk * kk);
  pd.ez = (kk - 1.0) * std::pow(a - b, 3) / (kk * kk * kk);
  return pd;
}

}  // namespace eznet
