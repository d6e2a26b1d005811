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

#include "siamts/numerics/ops.h"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "siamts/common/error.h"

namespace siamts::numerics {
namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>;
using MatMap = Eigen::Map<RowMat>;
using ConstMatMap = Eigen::Map<const RowMat>;
using VecMap = Eigen::Map<Eigen::ArrayXd>;
using ConstVecMap = Eigen::Map<const Eigen::ArrayXd>;

ConstMatMap as_matrix(const Tensor& t, std::size_t rows, std::size_t cols) {
  return ConstMatMap(t.raw(), static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
}
MatMap as_matrix(Tensor& t, std::size_t rows, std::size_t cols) {
  return MatMap(t.raw(), static_cast<Eigen::Index>(rows),
                static_cast<Eigen::Index>(cols));
}
ConstVecMap as_array(const Tensor& t) {
  return ConstVecMap(t.raw(), static_cast<Eigen::Index>(t.size()));
}
VecMap as_array(Tensor& t) {
  return VecMap(t.raw(), static_cast<Eigen::Index>(t.size()));
}

[[noreturn]] void shape_error(const std::string& op, const std::string& what) {
  throw ShapeError(op + ": " + what);
}

void require_same_shape(const std::string& op, Var a, Var b) {
  if (a.shape() != b.shape()) {
    shape_error(op, "shape mismatch " + shape_string(a.shape()) + " vs " +
                        shape_string(b.shape()));
  }
}

void require_rank(const std::string& op, Var x, std::size_t rank) {
  if (x.value().rank() != rank) {
    shape_error(op, "expected rank " + std::to_string(rank) + ", got " +
                        shape_string(x.shape()));
  }
}

// Reductions run as plain left-to-right loops: Eigen's vectorized ones peel
// by pointer alignment, which makes the rounding depend on the heap layout.
double ordered_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double ordered_dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

// Column sums of a row-major [rows x cols] block, accumulated row by row.
std::vector<double> column_sums(const double* x, std::size_t rows,
                                std::size_t cols) {
  std::vector<double> acc(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = x + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc[c] += row[c];
  }
  return acc;
}

// Adds `delta` into the gradient of `id` when that node tracks gradients.
template <typename Fn>
void accumulate(Graph& g, std::size_t id, Fn&& fill) {
  if (!g.tracks_grad(id)) return;
  fill(g.grad_buffer(id));
}

}  // namespace

Var add(Var a, Var b) {
  require_same_shape("add", a, b);
  Tensor out(a.shape());
  as_array(out) = as_array(a.value()) + as_array(b.value());
  const std::size_t ia = a.id(), ib = b.id();
  return a.graph().record("add", {a, b}, std::move(out),
                          [ia, ib](Graph& g, std::size_t self) {
                            const Tensor& dy = g.grad_of(self);
                            accumulate(g, ia, [&](Tensor& d) {
                              as_array(d) += as_array(dy);
                            });
                            accumulate(g, ib, [&](Tensor& d) {
                              as_array(d) += as_array(dy);
                            });
                          });
}

Var sub(Var a, Var b) {
  require_same_shape("sub", a, b);
  Tensor out(a.shape());
  as_array(out) = as_array(a.value()) - as_array(b.value());
  const std::size_t ia = a.id(), ib = b.id();
  return a.graph().record("sub", {a, b}, std::move(out),
                          [ia, ib](Graph& g, std::size_t self) {
                            const Tensor& dy = g.grad_of(self);
                            accumulate(g, ia, [&](Tensor& d) {
                              as_array(d) += as_array(dy);
                            });
                            accumulate(g, ib, [&](Tensor& d) {
                              as_array(d) -= as_array(dy);
                            });
                          });
}

Var mul(Var a, Var b) {
  require_same_shape("mul", a, b);
  Tensor out(a.shape());
  as_array(out) = as_array(a.value()) * as_array(b.value());
  const std::size_t ia = a.id(), ib = b.id();
  return a.graph().record(
      "mul", {a, b}, std::move(out), [ia, ib](Graph& g, std::size_t self) {
        const Tensor& dy = g.grad_of(self);
        accumulate(g, ia, [&](Tensor& d) {
          as_array(d) += as_array(dy) * as_array(g.value(ib));
        });
        accumulate(g, ib, [&](Tensor& d) {
          as_array(d) += as_array(dy) * as_array(g.value(ia));
        });
      });
}

Var scale(Var a, double factor) {
  Tensor out(a.shape());
  as_array(out) = as_array(a.value()) * factor;
  const std::size_t ia = a.id();
  return a.graph().record("scale", {a}, std::move(out),
                          [ia, factor](Graph& g, std::size_t self) {
                            accumulate(g, ia, [&](Tensor& d) {
                              as_array(d) += as_array(g.grad_of(self)) * factor;
                            });
                          });
}

Var matmul(Var a, Var b) {
  require_rank("matmul", a, 2);
  require_rank("matmul", b, 2);
  const std::size_t m = a.shape()[0], k = a.shape()[1], n = b.shape()[1];
  if (b.shape()[0] != k) {
    shape_error("matmul", "inner extents differ " + shape_string(a.shape()) +
                              " . " + shape_string(b.shape()));
  }
  Tensor out(Shape{m, n});
  as_matrix(out, m, n).noalias() =
      as_matrix(a.value(), m, k) * as_matrix(b.value(), k, n);
  const std::size_t ia = a.id(), ib = b.id();
  return a.graph().record(
      "matmul", {a, b}, std::move(out),
      [ia, ib, m, k, n](Graph& g, std::size_t self) {
        const auto dy = as_matrix(g.grad_of(self), m, n);
        accumulate(g, ia, [&](Tensor& d) {
          as_matrix(d, m, k).noalias() +=
              dy * as_matrix(g.value(ib), k, n).transpose();
        });
        accumulate(g, ib, [&](Tensor& d) {
          as_matrix(d, k, n).noalias() +=
              as_matrix(g.value(ia), m, k).transpose() * dy;
        });
      });
}

Var add_bias(Var x, Var bias) {
  require_rank("add_bias", bias, 1);
  if (x.value().rank() == 0 || x.shape().back() != bias.shape()[0]) {
    shape_error("add_bias", "bias " + shape_string(bias.shape()) +
                                " does not match last extent of " +
                                shape_string(x.shape()));
  }
  const std::size_t cols = bias.shape()[0];
  const std::size_t rows = x.value().size() / cols;
  Tensor out = x.value();
  as_matrix(out, rows, cols).rowwise() +=
      as_matrix(bias.value(), 1, cols).row(0);
  const std::size_t ix = x.id(), ib = bias.id();
  return x.graph().record(
      "add_bias", {x, bias}, std::move(out),
      [ix, ib, rows, cols](Graph& g, std::size_t self) {
        const Tensor& dy = g.grad_of(self);
        accumulate(g, ix, [&](Tensor& d) { as_array(d) += as_array(dy); });
        accumulate(g, ib, [&](Tensor& d) {
          const std::vector<double> col = column_sums(dy.raw(), rows, cols);
          for (std::size_t c = 0; c < cols; ++c) d[c] += col[c];
        });
      });
}

Var relu(Var x) {
  Tensor out(x.shape());
  as_array(out) = as_array(x.value()).max(0.0);
  const std::size_t ix = x.id();
  return x.graph().record("relu", {x}, std::move(out),
                          [ix](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              const auto xin = as_array(g.value(ix));
                              as_array(d) += (xin > 0.0).select(
                                  as_array(g.grad_of(self)), 0.0);
                            });
                          });
}

Var sigmoid(Var x) {
  Tensor out(x.shape());
  const Tensor& xv = x.value();
  for (std::size_t i = 0; i < xv.size(); ++i) {
    out[i] = 1.0 / (1.0 + std::exp(-xv[i]));
  }
  const std::size_t ix = x.id();
  return x.graph().record("sigmoid", {x}, std::move(out),
                          [ix](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              const auto y = as_array(g.value(self));
                              as_array(d) +=
                                  as_array(g.grad_of(self)) * y * (1.0 - y);
                            });
                          });
}

Var conv1d(Var x, Var kernels, std::size_t stride, std::size_t padding) {
  const std::string op = "conv1d";
  const Shape& xs = x.shape();
  if (xs.size() != 2 && xs.size() != 3) {
    shape_error(op, "input must be [T x C] or [B x T x C], got " +
                        shape_string(xs));
  }
  require_rank(op, kernels, 3);
  if (stride == 0) shape_error(op, "stride must be positive");
  const bool batched = xs.size() == 3;
  const std::size_t batch = batched ? xs[0] : 1;
  const std::size_t steps = xs[xs.size() - 2];
  const std::size_t c_in = xs.back();
  const std::size_t width = kernels.shape()[0];
  const std::size_t c_out = kernels.shape()[2];
  if (kernels.shape()[1] != c_in) {
    shape_error(op, "kernels " + shape_string(kernels.shape()) +
                        " expect " + std::to_string(kernels.shape()[1]) +
                        " input channels, input " + shape_string(xs) +
                        " has " + std::to_string(c_in));
  }
  if (width == 0 || width > steps + 2 * padding) {
    shape_error(op, "kernel width " + std::to_string(width) +
                        " exceeds padded input length " +
                        std::to_string(steps + 2 * padding));
  }
  const std::size_t out_steps = (steps + 2 * padding - width) / stride + 1;
  const std::size_t rows = batch * out_steps;
  const std::size_t patch = width * c_in;

  // im2col: row (b, t) holds the receptive field of output step t.
  auto cols = std::make_shared<Tensor>(Shape{rows, patch}, 0.0);
  const double* src = x.value().raw();
  double* dst = cols->raw();
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t t = 0; t < out_steps; ++t) {
      double* row = dst + (b * out_steps + t) * patch;
      for (std::size_t k = 0; k < width; ++k) {
        const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(t * stride + k) -
                                 static_cast<std::ptrdiff_t>(padding);
        if (s < 0 || s >= static_cast<std::ptrdiff_t>(steps)) continue;
        std::copy_n(src + (b * steps + static_cast<std::size_t>(s)) * c_in,
                    c_in, row + k * c_in);
      }
    }
  }

  Shape out_shape = batched ? Shape{batch, out_steps, c_out}
                            : Shape{out_steps, c_out};
  Tensor out(out_shape);
  as_matrix(out, rows, c_out).noalias() =
      as_matrix(*cols, rows, patch) * as_matrix(kernels.value(), patch, c_out);

  const std::size_t ix = x.id(), iw = kernels.id();
  return x.graph().record(
      op, {x, kernels}, std::move(out),
      [=](Graph& g, std::size_t self) {
        const auto dy = as_matrix(g.grad_of(self), rows, c_out);
        accumulate(g, iw, [&](Tensor& d) {
          as_matrix(d, patch, c_out).noalias() +=
              as_matrix(*cols, rows, patch).transpose() * dy;
        });
        accumulate(g, ix, [&](Tensor& d) {
          RowMat dcols =
              dy * as_matrix(g.value(iw), patch, c_out).transpose();
          double* dx = d.raw();
          for (std::size_t b = 0; b < batch; ++b) {
            for (std::size_t t = 0; t < out_steps; ++t) {
              const double* row = dcols.data() + (b * out_steps + t) * patch;
              for (std::size_t k = 0; k < width; ++k) {
                const std::ptrdiff_t s =
                    static_cast<std::ptrdiff_t>(t * stride + k) -
                    static_cast<std::ptrdiff_t>(padding);
                if (s < 0 || s >= static_cast<std::ptrdiff_t>(steps)) continue;
                double* target =
                    dx + (b * steps + static_cast<std::size_t>(s)) * c_in;
                for (std::size_t c = 0; c < c_in; ++c) {
                  target[c] += row[k * c_in + c];
                }
              }
            }
          }
        });
      });
}

Var mean_over_time(Var x) {
  require_rank("mean_over_time", x, 3);
  const std::size_t batch = x.shape()[0], steps = x.shape()[1],
                    ch = x.shape()[2];
  Tensor out(Shape{batch, ch}, 0.0);
  for (std::size_t b = 0; b < batch; ++b) {
    const std::vector<double> col =
        column_sums(x.value().raw() + b * steps * ch, steps, ch);
    for (std::size_t c = 0; c < ch; ++c) {
      out[b * ch + c] = col[c] / static_cast<double>(steps);
    }
  }
  const std::size_t ix = x.id();
  return x.graph().record(
      "mean_over_time", {x}, std::move(out),
      [ix, batch, steps, ch](Graph& g, std::size_t self) {
        accumulate(g, ix, [&](Tensor& d) {
          const auto dy = as_matrix(g.grad_of(self), batch, ch);
          const double inv = 1.0 / static_cast<double>(steps);
          for (std::size_t b = 0; b < batch; ++b) {
            MatMap(d.raw() + b * steps * ch, static_cast<Eigen::Index>(steps),
                   static_cast<Eigen::Index>(ch))
                .rowwise() += dy.row(static_cast<Eigen::Index>(b)) * inv;
          }
        });
      });
}

Var reshape(Var x, Shape shape) {
  Tensor out = x.value().reshaped(std::move(shape));
  const std::size_t ix = x.id();
  return x.graph().record("reshape", {x}, std::move(out),
                          [ix](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              as_array(d) += as_array(g.grad_of(self));
                            });
                          });
}

Var sum(Var x) {
  Tensor out = Tensor::scalar(ordered_sum(x.value().raw(), x.value().size()));
  const std::size_t ix = x.id();
  return x.graph().record("sum", {x}, std::move(out),
                          [ix](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              as_array(d) += g.grad_of(self)[0];
                            });
                          });
}

Var mean(Var x) {
  const double n = static_cast<double>(x.value().size());
  Tensor out =
      Tensor::scalar(ordered_sum(x.value().raw(), x.value().size()) / n);
  const std::size_t ix = x.id();
  return x.graph().record("mean", {x}, std::move(out),
                          [ix, n](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              as_array(d) += g.grad_of(self)[0] / n;
                            });
                          });
}

Var sum_squares(Var x) {
  const Tensor& xv = x.value();
  Tensor out = Tensor::scalar(ordered_dot(xv.raw(), xv.raw(), xv.size()));
  const std::size_t ix = x.id();
  return x.graph().record("sum_squares", {x}, std::move(out),
                          [ix](Graph& g, std::size_t self) {
                            accumulate(g, ix, [&](Tensor& d) {
                              as_array(d) += 2.0 * g.grad_of(self)[0] *
                                             as_array(g.value(ix));
                            });
                          });
}

Var cosine_similarity(Var p, Var z) {
  const std::string op = "cosine_similarity";
  require_same_shape(op, p, z);
  const std::size_t rank = p.value().rank();
  if (rank != 1 && rank != 2) {
    shape_error(op, "expected vectors or [B x D] rows, got " +
                        shape_string(p.shape()));
  }
  const std::size_t rows = rank == 1 ? 1 : p.shape()[0];
  const std::size_t dim = p.shape().back();
  if (dim == 0) shape_error(op, "empty vectors");
  auto p_norm = std::make_shared<Eigen::VectorXd>(static_cast<Eigen::Index>(rows));
  auto z_norm = std::make_shared<Eigen::VectorXd>(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const double* pr = p.value().raw() + r * dim;
    const double* zr = z.value().raw() + r * dim;
    const auto i = static_cast<Eigen::Index>(r);
    (*p_norm)(i) = std::sqrt(ordered_dot(pr, pr, dim));
    (*z_norm)(i) = std::sqrt(ordered_dot(zr, zr, dim));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    if ((*p_norm)(i) == 0.0 || (*z_norm)(i) == 0.0) {
      throw NumericError(op + ": zero-norm vector (degenerate embedding) in " +
                         "row " + std::to_string(r));
    }
  }
  Tensor out = rank == 1 ? Tensor::scalar(0.0) : Tensor(Shape{rows});
  for (std::size_t r = 0; r < rows; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    out[r] = ordered_dot(p.value().raw() + r * dim, z.value().raw() + r * dim,
                         dim) /
             ((*p_norm)(i) * (*z_norm)(i));
  }
  const std::size_t ip = p.id(), iz = z.id();
  return p.graph().record(
      op, {p, z}, std::move(out),
      [=](Graph& g, std::size_t self) {
        const Tensor& dy = g.grad_of(self);
        const Tensor& sim = g.value(self);
        const auto pv = as_matrix(g.value(ip), rows, dim);
        const auto zv = as_matrix(g.value(iz), rows, dim);
        // d sim / d p = z / (|p||z|) - sim * p / |p|^2, symmetric in z.
        accumulate(g, ip, [&](Tensor& d) {
          auto dm = as_matrix(d, rows, dim);
          for (std::size_t r = 0; r < rows; ++r) {
            const auto i = static_cast<Eigen::Index>(r);
            const double pn = (*p_norm)(i), zn = (*z_norm)(i);
            dm.row(i) += dy[r] * (zv.row(i) / (pn * zn) -
                                  sim[r] * pv.row(i) / (pn * pn));
          }
        });
        accumulate(g, iz, [&](Tensor& d) {
          auto dm = as_matrix(d, rows, dim);
          for (std::size_t r = 0; r < rows; ++r) {
            const auto i = static_cast<Eigen::Index>(r);
            const double pn = (*p_norm)(i), zn = (*z_norm)(i);
            dm.row(i) += dy[r] * (pv.row(i) / (pn * zn) -
                                  sim[r] * zv.row(i) / (zn * zn));
          }
        });
      });
}

Var softmax(Var logits) {
  require_rank("softmax", logits, 2);
  const std::size_t rows = logits.shape()[0], cols = logits.shape()[1];
  Tensor out(logits.shape());
  const auto lm = as_matrix(logits.value(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    const double mx = lm.row(i).maxCoeff();
    double* orow = out.raw() + r * cols;
    const double* lrow = logits.value().raw() + r * cols;
    for (std::size_t c = 0; c < cols; ++c) orow[c] = std::exp(lrow[c] - mx);
    const double z = ordered_sum(orow, cols);
    for (std::size_t c = 0; c < cols; ++c) orow[c] /= z;
  }
  const std::size_t il = logits.id();
  return logits.graph().record(
      "softmax", {logits}, std::move(out),
      [il, rows, cols](Graph& g, std::size_t self) {
        accumulate(g, il, [&](Tensor& d) {
          const auto y = as_matrix(g.value(self), rows, cols);
          const auto dy = as_matrix(g.grad_of(self), rows, cols);
          auto dm = as_matrix(d, rows, cols);
          for (std::size_t r = 0; r < rows; ++r) {
            const auto i = static_cast<Eigen::Index>(r);
            const double dot =
                ordered_dot(y.data() + r * cols, dy.data() + r * cols, cols);
            dm.row(i).array() +=
                y.row(i).array() * (dy.row(i).array() - dot);
          }
        });
      });
}

Var softmax_cross_entropy(Var logits, std::span<const int> labels) {
  const std::string op = "softmax_cross_entropy";
  require_rank(op, logits, 2);
  const std::size_t rows = logits.shape()[0], cols = logits.shape()[1];
  if (labels.size() != rows) {
    shape_error(op, std::to_string(labels.size()) + " labels for " +
                        std::to_string(rows) + " rows");
  }
  auto probs = std::make_shared<RowMat>(static_cast<Eigen::Index>(rows),
                                        static_cast<Eigen::Index>(cols));
  const auto lm = as_matrix(logits.value(), rows, cols);
  double total = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    if (labels[r] < 0 || static_cast<std::size_t>(labels[r]) >= cols) {
      throw DataError(op + ": label " + std::to_string(labels[r]) +
                      " outside [0, " + std::to_string(cols) + ")");
    }
    const double mx = lm.row(i).maxCoeff();
    double* prow = probs->data() + r * cols;
    const double* lrow = logits.value().raw() + r * cols;
    for (std::size_t c = 0; c < cols; ++c) prow[c] = std::exp(lrow[c] - mx);
    const double z = ordered_sum(prow, cols);
    for (std::size_t c = 0; c < cols; ++c) prow[c] /= z;
    total += mx + std::log(z) - lm(i, labels[r]);
  }
  std::vector<int> owned(labels.begin(), labels.end());
  const std::size_t il = logits.id();
  return logits.graph().record(
      op, {logits}, Tensor::scalar(total / static_cast<double>(rows)),
      [=](Graph& g, std::size_t self) {
        accumulate(g, il, [&](Tensor& d) {
          const double s = g.grad_of(self)[0] / static_cast<double>(rows);
          auto dm = as_matrix(d, rows, cols);
          dm += s * (*probs);
          for (std::size_t r = 0; r < rows; ++r) {
            dm(static_cast<Eigen::Index>(r), owned[r]) -= s;
          }
        });
      });
}

Var sigmoid_cross_entropy(Var logits, std::span<const double> targets) {
  const std::string op = "sigmoid_cross_entropy";
  const std::size_t n = logits.value().size();
  if (targets.size() != n) {
    shape_error(op, std::to_string(targets.size()) + " targets for logits " +
                        shape_string(logits.shape()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = logits.value()[i];
    total += std::max(l, 0.0) - l * targets[i] + std::log1p(std::exp(-std::abs(l)));
  }
  std::vector<double> owned(targets.begin(), targets.end());
  const std::size_t il = logits.id();
  return logits.graph().record(
      op, {logits}, Tensor::scalar(total / static_cast<double>(n)),
      [=](Graph& g, std::size_t self) {
        accumulate(g, il, [&](Tensor& d) {
          const double s = g.grad_of(self)[0] / static_cast<double>(n);
          const Tensor& l = g.value(il);
          for (std::size_t i = 0; i < n; ++i) {
            d[i] += s * (1.0 / (1.0 + std::exp(-l[i])) - owned[i]);
          }
        });
      });
}

Var standardize(Var x, double epsilon) {
  require_rank("standardize", x, 2);
  const std::size_t rows = x.shape()[0], cols = x.shape()[1];
  const double n = static_cast<double>(rows);
  const double* xv = x.value().raw();
  std::vector<double> mu = column_sums(xv, rows, cols);
  for (double& m : mu) m /= n;
  auto inv_std = std::make_shared<std::vector<double>>(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double dev = xv[r * cols + c] - mu[c];
      (*inv_std)[c] += dev * dev;
    }
  }
  for (double& v : *inv_std) v = 1.0 / std::sqrt(v / n + epsilon);
  Tensor out(x.shape());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out[r * cols + c] = (xv[r * cols + c] - mu[c]) * (*inv_std)[c];
    }
  }
  const std::size_t ix = x.id();
  return x.graph().record(
      "standardize", {x}, std::move(out),
      [ix, rows, cols, n, inv_std](Graph& g, std::size_t self) {
        accumulate(g, ix, [&](Tensor& d) {
          const double* y = g.value(self).raw();
          const double* dy = g.grad_of(self).raw();
          const std::vector<double> sum_dy = column_sums(dy, rows, cols);
          std::vector<double> sum_dy_y(cols, 0.0);
          for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
              sum_dy_y[c] += dy[r * cols + c] * y[r * cols + c];
            }
          }
          for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
              const std::size_t k = r * cols + c;
              d[k] += (n * dy[k] - y[k] * sum_dy_y[c] - sum_dy[c]) *
                      ((*inv_std)[c] / n);
            }
          }
        });
      });
}

}  // namespace siamts::numerics
