// Copyright 2026 The SiamTS Authors.
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

#include "siamts/augment/spline.h"

#include <algorithm>

#include "siamts/common/error.h"

namespace siamts::augment {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n) {
    throw ConfigError("CubicSpline: need >= 2 knots with matching values");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(xs_[i] > xs_[i - 1])) {
      throw ConfigError("CubicSpline: knot positions must increase");
    }
  }
  // Tridiagonal solve for the second derivatives, natural end conditions.
  second_derivs_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (xs_[i] - xs_[i - 1]) / (xs_[i + 1] - xs_[i - 1]);
    const double p = sig * second_derivs_[i - 1] + 2.0;
    second_derivs_[i] = (sig - 1.0) / p;
    const double slope_diff = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]) -
                              (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
    u[i] = (6.0 * slope_diff / (xs_[i + 1] - xs_[i - 1]) - sig * u[i - 1]) / p;
  }
  second_derivs_[n - 1] = 0.0;
  for (std::size_t k = n - 1; k-- > 0;) {
    second_derivs_[k] = second_derivs_[k] * second_derivs_[k + 1] + u[k];
  }
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = xs_.size();
  std::size_t hi = static_cast<std::size_t>(
      std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  hi = std::clamp<std::size_t>(hi, 1, n - 1);
  const std::size_t lo = hi - 1;
  const double h = xs_[hi] - xs_[lo];
  const double a = (xs_[hi] - x) / h;
  const double b = (x - xs_[lo]) / h;
  // ys_[lo] + b * (ys_[hi] - ys_[lo]) keeps constant segments exact.
  return ys_[lo] + b * (ys_[hi] - ys_[lo]) +
         ((a * a * a - a) * second_derivs_[lo] +
          (b * b * b - b) * second_derivs_[hi]) *
             (h * h) / 6.0;
}

std::vector<double> uniform_knots(std::size_t count, double last) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = last * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return xs;
}

}  // namespace siamts::augment
