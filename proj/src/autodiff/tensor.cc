// src/autodiff/tensor.cc

// Copyright 2026  The uen authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "uen/autodiff/tensor.h"

#include <sstream>
#include <unordered_set>

#include "uen/base/errors.h"

namespace uen {

int64_t NumElements(const Shape &shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d < 0) UEN_THROW(DimensionError, "negative dimension in shape");
    n *= d;
  }
  return n;
}

std::string ShapeToString(const Shape &shape) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < shape.size(); i++) {
    if (i) os << ',';
    os << shape[i];
  }
  os << ')';
  return os.str();
}

namespace {
thread_local bool grad_mode_enabled = true;
}

NoGradGuard::NoGradGuard() : previous_(grad_mode_enabled) {
  grad_mode_enabled = false;
}
NoGradGuard::~NoGradGuard() { grad_mode_enabled = previous_; }

bool GradModeEnabled() { return grad_mode_enabled; }

template <typename Real>
Tensor<Real>::Tensor(Shape shape, bool requires_grad)
    : node_(std::make_shared<NodeType>()) {
  node_->data = Array::Zero(NumElements(shape));
  node_->shape = std::move(shape);
  node_->requires_grad = requires_grad;
}

template <typename Real>
Tensor<Real>::Tensor(Shape shape, Array data, bool requires_grad)
    : node_(std::make_shared<NodeType>()) {
  if (NumElements(shape) != data.size())
    UEN_THROW(DimensionError, "shape ", ShapeToString(shape),
              " does not match buffer of ", data.size(), " elements");
  node_->shape = std::move(shape);
  node_->data = std::move(data);
  node_->requires_grad = requires_grad;
}

template <typename Real>
Tensor<Real> Tensor<Real>::Full(Shape shape, Real value, bool requires_grad) {
  const int64_t n = NumElements(shape);
  return Tensor(std::move(shape), Array::Constant(n, value), requires_grad);
}

template <typename Real>
Tensor<Real> Tensor<Real>::Scalar(Real value, bool requires_grad) {
  return Full(Shape{}, value, requires_grad);
}

template <typename Real>
const Shape &Tensor<Real>::shape() const {
  if (!node_) UEN_THROW(UsageError, "use of undefined tensor");
  return node_->shape;
}

template <typename Real>
int64_t Tensor<Real>::dim(int axis) const {
  const Shape &s = shape();
  if (axis < 0) axis += static_cast<int>(s.size());
  if (axis < 0 || axis >= static_cast<int>(s.size()))
    UEN_THROW(DimensionError, "axis ", axis, " out of range for shape ",
              ShapeToString(s));
  return s[axis];
}

template <typename Real>
int64_t Tensor<Real>::size() const {
  return data().size();
}

template <typename Real>
const typename Tensor<Real>::Array &Tensor<Real>::data() const {
  if (!node_) UEN_THROW(UsageError, "use of undefined tensor");
  return node_->data;
}

template <typename Real>
typename Tensor<Real>::Array &Tensor<Real>::mutable_data() {
  if (!node_) UEN_THROW(UsageError, "use of undefined tensor");
  return node_->data;
}

template <typename Real>
Real Tensor<Real>::item() const {
  if (size() != 1)
    UEN_THROW(DimensionError, "item() on tensor of shape ",
              ShapeToString(shape()));
  return node_->data[0];
}

template <typename Real>
bool Tensor<Real>::requires_grad() const {
  return node_ && node_->requires_grad;
}

template <typename Real>
void Tensor<Real>::set_requires_grad(bool value) {
  if (!node_) UEN_THROW(UsageError, "use of undefined tensor");
  if (!node_->parents.empty())
    UEN_THROW(UsageError, "requires_grad can only be set on leaf tensors");
  node_->requires_grad = value;
}

template <typename Real>
bool Tensor<Real>::has_grad() const {
  return node_ && node_->grad.size() != 0;
}

template <typename Real>
const typename Tensor<Real>::Array &Tensor<Real>::grad() const {
  if (!has_grad()) UEN_THROW(UsageError, "tensor has no gradient");
  return node_->grad;
}

template <typename Real>
typename Tensor<Real>::Array &Tensor<Real>::mutable_grad() {
  if (!node_) UEN_THROW(UsageError, "use of undefined tensor");
  return node_->EnsureGrad();
}

template <typename Real>
void Tensor<Real>::ClearGrad() {
  if (node_) node_->grad.resize(0);
}

template <typename Real>
void Tensor<Real>::Backward() const {
  if (size() != 1)
    UEN_THROW(UsageError, "Backward() requires a scalar, got shape ",
              ShapeToString(shape()));
  if (!node_->requires_grad)
    UEN_THROW(UsageError, "Backward() on a tensor that does not require grad");

  // Iterative post-order DFS gives a topological order (inputs first).
  std::vector<NodeType *> order;
  std::unordered_set<NodeType *> visited;
  std::vector<std::pair<NodeType *, size_t>> stack;
  stack.emplace_back(node_.get(), 0);
  visited.insert(node_.get());
  while (!stack.empty()) {
    auto &[node, next] = stack.back();
    if (next < node->parents.size()) {
      NodeType *parent = node->parents[next++].get();
      if (parent && parent->requires_grad && visited.insert(parent).second)
        stack.emplace_back(parent, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }

  for (NodeType *node : order)
    if (!node->parents.empty()) node->grad.resize(0);
  node_->grad = Array::Ones(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeType *node = *it;
    if (node->backward && node->grad.size() != 0) node->backward(*node);
  }
}

template <typename Real>
Tensor<Real> Tensor<Real>::Detach() const {
  return Tensor(shape(), data(), false);
}

template <typename Real>
Tensor<Real> Tensor<Real>::MakeResult(Shape shape, Array data,
                                      const std::vector<Tensor> &inputs,
                                      BackwardFn backward) {
  Tensor result(std::move(shape), std::move(data), false);
  if (!GradModeEnabled()) return result;
  bool any = false;
  for (const Tensor &t : inputs) any = any || t.requires_grad();
  if (!any) return result;
  result.node_->requires_grad = true;
  result.node_->parents.reserve(inputs.size());
  for (const Tensor &t : inputs) result.node_->parents.push_back(t.node_);
  result.node_->backward = std::move(backward);
  return result;
}

template class Tensor<float>;
template class Tensor<double>;

}  // namespace uen
