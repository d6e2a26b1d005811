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

#ifndef SIAMTS_NUMERICS_OPS_H_
#define SIAMTS_NUMERICS_OPS_H_

#include <span>

#include "siamts/numerics/graph.h"

namespace siamts::numerics {

// Elementwise; operands must have identical shapes.
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double factor);

inline Var operator+(Var a, Var b) { return add(a, b); }
inline Var operator-(Var a, Var b) { return sub(a, b); }
inline Var operator*(Var a, Var b) { return mul(a, b); }
inline Var operator*(double s, Var a) { return scale(a, s); }

// [M x K] . [K x N] -> [M x N]
Var matmul(Var a, Var b);

// Adds `bias` (rank 1, length = last extent of x) to every row of x.
Var add_bias(Var x, Var bias);

Var relu(Var x);
Var sigmoid(Var x);

// Cross-correlation over time. x is [B x T x Cin] (or [T x Cin]), kernels
// are [K x Cin x Cout]. Output is [B x T' x Cout] with
// T' = floor((T + 2 * padding - K) / stride) + 1.
Var conv1d(Var x, Var kernels, std::size_t stride, std::size_t padding);

// [B x T x C] -> [B x C], average over the time axis.
Var mean_over_time(Var x);

Var reshape(Var x, Shape shape);
inline Var stop_gradient(Var x) { return x.graph().stop_gradient(x); }

// Reductions to a rank-0 scalar.
Var sum(Var x);
Var mean(Var x);
Var sum_squares(Var x);

// For rank-1 p and z, a scalar dot(p, z) / (|p| |z|); for rank-2 inputs the
// row-wise similarities as a [B] vector. Throws NumericError on a zero-norm
// row.
Var cosine_similarity(Var p, Var z);

// Row-wise softmax of [B x N] logits.
Var softmax(Var logits);

// Mean over rows of -log softmax(logits)[label].
Var softmax_cross_entropy(Var logits, std::span<const int> labels);

// Mean binary cross-entropy of sigmoid(logits) against 0/1 targets; logits
// are [B] or [B x 1].
Var sigmoid_cross_entropy(Var logits, std::span<const double> targets);

// Standardizes every column of a [B x D] batch to zero mean and unit
// variance (no affine parameters).
Var standardize(Var x, double epsilon = 1e-5);

}  // namespace siamts::numerics

#endif  // SIAMTS_NUMERICS_OPS_H_
