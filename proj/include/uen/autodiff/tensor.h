// uen/autodiff/tensor.h

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

#ifndef UEN_AUTODIFF_TENSOR_H_
#define UEN_AUTODIFF_TENSOR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace uen {

using Shape = std::vector<int64_t>;

int64_t NumElements(const Shape &shape);
std::string ShapeToString(const Shape &shape);

namespace internal {

template <typename Real>
struct Node {
  using Array = Eigen::Array<Real, Eigen::Dynamic, 1>;

  Shape shape;
  Array data;
  Array grad;  // empty until something is accumulated into it
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  // Reads this->grad and accumulates into parents' grads.
  std::function<void(Node &)> backward;

  Array &EnsureGrad() {
    if (grad.size() == 0) grad = Array::Zero(data.size());
    return grad;
  }
};

}  // namespace internal

// Disables graph recording on the current thread while alive.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard &) = delete;
  NoGradGuard &operator=(const NoGradGuard &) = delete;

 private:
  bool previous_;
};

bool GradModeEnabled();

/**
   Tensor is a reference-counted handle onto a node of the computation
   graph.  Copies alias the same storage (parameters are updated in place
   through any handle).  Data is contiguous row-major.

   An op's result records its inputs and a backward closure only when some
   input requires a gradient and grad mode is enabled; otherwise it is a
   plain value.
*/
template <typename Real>
class Tensor {
 public:
  using Array = Eigen::Array<Real, Eigen::Dynamic, 1>;
  using NodeType = internal::Node<Real>;
  using BackwardFn = std::function<void(NodeType &)>;

  Tensor() = default;
  // Zero-filled tensor.
  explicit Tensor(Shape shape, bool requires_grad = false);
  Tensor(Shape shape, Array data, bool requires_grad = false);

  static Tensor Full(Shape shape, Real value, bool requires_grad = false);
  static Tensor Scalar(Real value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape &shape() const;
  int64_t dim(int axis) const;
  int ndim() const { return static_cast<int>(shape().size()); }
  int64_t size() const;

  const Array &data() const;
  // In-place access; does not invalidate recorded graphs that captured the
  // node, so only optimizers and initializers should write through it.
  Array &mutable_data();
  Real item() const;

  bool requires_grad() const;
  void set_requires_grad(bool value);
  bool has_grad() const;
  const Array &grad() const;
  Array &mutable_grad();
  void ClearGrad();

  // Reverse-mode sweep from this scalar.  Leaf gradients accumulate across
  // calls; intermediate gradients are recomputed each call.
  void Backward() const;

  // Copy of the values with no history and requires_grad = false.
  Tensor Detach() const;

  bool SameNode(const Tensor &other) const { return node_ == other.node_; }
  NodeType *node() const { return node_.get(); }

  // Builds an op result.  `backward` is dropped (and inputs not retained)
  // when no input requires a gradient or grad mode is off.
  static Tensor MakeResult(Shape shape, Array data,
                           const std::vector<Tensor> &inputs,
                           BackwardFn backward);

 private:
  explicit Tensor(std::shared_ptr<NodeType> node) : node_(std::move(node)) {}
  std::shared_ptr<NodeType> node_;
};

extern template class Tensor<float>;
extern template class Tensor<double>;

}  // namespace uen

#endif  // UEN_AUTODIFF_TENSOR_H_
