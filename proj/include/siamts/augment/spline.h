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

#ifndef SIAMTS_AUGMENT_SPLINE_H_
#define SIAMTS_AUGMENT_SPLINE_H_

#include <vector>

namespace siamts::augment {

// Natural cubic spline through (xs[i], ys[i]); xs strictly increasing.
// Two knots degrade to linear interpolation.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> second_derivs_;
};

// `count` knot positions spread uniformly over [0, last].
std::vector<double> uniform_knots(std::size_t count, double last);

}  // namespace siamts::augment

#endif  // SIAMTS_AUGMENT_SPLINE_H_
