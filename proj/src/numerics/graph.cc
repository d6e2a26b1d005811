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

#include "siamts/numerics/graph.h"

#include <utility>

#include "siamts/common/error.h"

namespace siamts::numerics {

const Tensor& Var::value() const { return graph_->value(id_); }

Var Graph::push(Node node) {
  nodes_.push_back(std::move(node));
  return Var(this, nodes_.size() - 1);
}

Var Graph::constant(Tensor value) {
  Node n;
  n.op = "constant";
  n.value = std::move(value);
  return push(std::move(n));
}

Var Graph::input(Tensor value, bool requires_grad) {
  Node n;
  n.op = "input";
  n.value = std::move(value);
  n.requires_grad = requires_grad;
  return push(std::move(n));
}

Var Graph::parameter(Tensor* param) {
  Node n;
  n.op = "parameter";
  n.borrowed = param;
  n.requires_grad = true;
  return push(std::move(n));
}

Var Graph::frozen(const Tensor* param) {
  Node n;
  n.op = "frozen";
  n.borrowed = param;
  return push(std::move(n));
}

Var Graph::record(std::string op, const std::vector<Var>& inputs, Tensor value,
                  BackwardFn backward) {
  Node n;
  n.op = std::move(op);
  n.value = std::move(value);
  for (const Var& v : inputs) {
    if (&v.graph() != this) {
      throw Error("graph: op '" + n.op + "' mixes nodes of different graphs");
    }
    n.inputs.push_back(v.id());
    n.requires_grad = n.requires_grad || nodes_[v.id()].requires_grad;
  }
  if (n.requires_grad) n.backward = std::move(backward);
  return push(std::move(n));
}

Var Graph::stop_gradient(Var x) {
  Node n;
  n.op = "stop_gradient";
  n.inputs = {x.id()};
  n.value = x.value();
  n.stop_gradient = true;
  return push(std::move(n));
}

const Tensor* Graph::grad(Var v) const {
  const Node& n = nodes_.at(v.id());
  return n.grad ? &*n.grad : nullptr;
}

Tensor& Graph::grad_buffer(std::size_t id) {
  Node& n = nodes_[id];
  if (!n.grad) n.grad = Tensor(n.val().shape(), 0.0);
  return *n.grad;
}

void Graph::backward(Var root) {
  if (root.value().size() != 1) {
    throw NumericError("backward: root '" + nodes_[root.id()].op +
                       "' is not scalar, shape " +
                       shape_string(root.shape()));
  }
  for (Node& n : nodes_) n.grad.reset();
  if (!nodes_[root.id()].requires_grad) return;
  grad_buffer(root.id()).fill(1.0);

  for (std::size_t id = root.id() + 1; id-- > 0;) {
    Node& n = nodes_[id];
    if (!n.requires_grad || !n.grad || !n.backward) continue;
    n.backward(*this, id);
    for (std::size_t in : nodes_[id].inputs) {
      const Node& src = nodes_[in];
      if (src.grad && !src.grad->all_finite()) {
        throw NumericError("backward: non-finite gradient produced by op '" +
                           nodes_[id].op + "' (node " + std::to_string(id) +
                           ")");
      }
    }
  }
}

}  // namespace siamts::numerics
