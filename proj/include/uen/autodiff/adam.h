// uen/autodiff/adam.h

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

#ifndef UEN_AUTODIFF_ADAM_H_
#define UEN_AUTODIFF_ADAM_H_

#include <string>
#include <vector>

#include "uen/autodiff/tensor-archive.h"
#include "uen/autodiff/tensor.h"

namespace uen {

struct AdamOptions {
  double beta1 = 0.5;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename Real>
struct AdamState {
  std::vector<Eigen::Array<Real, Eigen::Dynamic, 1>> first_moment;
  std::vector<Eigen::Array<Real, Eigen::Dynamic, 1>> second_moment;
  int64_t step_count = 0;
  AdamOptions options;
};

// Bias-corrected Adam over a fixed parameter list.  No weight decay, no
// gradient clipping.
template <typename Real>
class Adam {
 public:
  explicit Adam(std::vector<Tensor<Real>> params, AdamOptions options = {});

  // Applies one update and clears the gradients.  Throws UsageError (and
  // leaves every parameter untouched) if any parameter lacks a gradient.
  void Step(double learning_rate);
  void ClearGrads();

  const std::vector<Tensor<Real>> &params() const { return params_; }
  const AdamState<Real> &state() const { return state_; }

  // Moments are stored as <prefix>/<index>/m and <prefix>/<index>/v, the
  // step counter as <prefix>/step.
  void Save(const std::string &prefix, TensorArchive *archive) const;
  void Load(const std::string &prefix, const TensorArchive &archive);

 private:
  std::vector<Tensor<Real>> params_;
  AdamState<Real> state_;
};

extern template class Adam<float>;
extern template class Adam<double>;

}  // namespace uen

#endif  // UEN_AUTODIFF_ADAM_H_
