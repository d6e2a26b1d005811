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

#ifndef SIAMTS_NUMERICS_GRAPH_H_
#define SIAMTS_NUMERICS_GRAPH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "siamts/numerics/tensor.h"

namespace siamts::numerics {

class Graph;

// Handle to a node of a Graph. Cheap to copy; only valid while the graph
// that created it is alive.
class Var {
 public:
  Var() = default;

  Graph& graph() const { return *graph_; }
  std::size_t id() const { return id_; }
  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
  bool valid() const { return graph_ != nullptr; }

 private:
  friend class Graph;
  Var(Graph* graph, std::size_t id) : graph_(graph), id_(id) {}

  Graph* graph_ = nullptr;
  std::size_t id_ = 0;
};

// Propagates the gradient of node `self` into the gradients of its inputs.
using BackwardFn = std::function<void(Graph& graph, std::size_t self)>;

struct Node {
  std::string op;
  std::vector<std::size_t> inputs;
  Tensor value;
  // Non-owning view of an external tensor (parameters); `value` is unused
  // when set.
  const Tensor* borrowed = nullptr;
  std::optional<Tensor> grad;
  bool requires_grad = false;
  bool stop_gradient = false;
  BackwardFn backward;

  const Tensor& val() const { return borrowed ? *borrowed : value; }
};

// Define-by-run reverse-mode tape. Every op evaluates eagerly when it is
// recorded, so node ids are a topological order and backward() walks them
// in reverse.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  Var constant(Tensor value);
  Var input(Tensor value, bool requires_grad = false);
  // Gradient leaf viewing `param`; the tensor must outlive the graph.
  Var parameter(Tensor* param);
  // Non-trainable view of `param`.
  Var frozen(const Tensor* param);

  // Appends an op node. Its gradient is tracked when any input is.
  Var record(std::string op, const std::vector<Var>& inputs, Tensor value,
             BackwardFn backward);
  // Identity on values; gradients never flow through it.
  Var stop_gradient(Var x);

  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const Node& node(Var v) const { return node(v.id()); }
  const Tensor& value(std::size_t id) const { return nodes_[id].val(); }
  std::size_t size() const { return nodes_.size(); }
  bool tracks_grad(std::size_t id) const { return nodes_[id].requires_grad; }

  // Gradient of the last backward() root with respect to `v`, or null when
  // no gradient reached it.
  const Tensor* grad(Var v) const;
  const Tensor& grad_of(std::size_t id) const { return *nodes_[id].grad; }
  // Zero-initialized gradient buffer of node `id`, for BackwardFn bodies.
  Tensor& grad_buffer(std::size_t id);

  // Seeds d(root)/d(root) = 1 and back-propagates. The root must hold a
  // single value. Throws NumericError naming the first op that produced a
  // non-finite gradient.
  void backward(Var root);

 private:
  Var push(Node node);

  std::vector<Node> nodes_;
};

// The graph is evaluated eagerly; this returns the cached root value.
inline const Tensor& forward(Var root) { return root.value(); }

}  // namespace siamts::numerics

#endif  // SIAMTS_NUMERICS_GRAPH_H_
