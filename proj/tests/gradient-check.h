// tests/gradient-check.h

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

#ifndef UEN_TESTS_GRADIENT_CHECK_H_
#define UEN_TESTS_GRADIENT_CHECK_H_

// Central finite-difference oracle for the double-precision autodiff path.
// Independent of the backward implementations: it only calls forward ops.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "uen/autodiff/ops.h"
#include "uen/autodiff/tensor.h"
#include "uen/base/random.h"

namespace uen {
namespace testing {

using TensorD = Tensor<double>;

inline TensorD RandomTensor(const Shape &shape, Rng &rng, double scale = 1.0,
                            bool requires_grad = true) {
  Eigen::ArrayXd v(NumElements(shape));
  for (Eigen::Index i = 0; i < v.size(); i++)
    v[i] = scale * StandardNormal(rng);
  return TensorD(shape, v, requires_grad);
}

// Returns the largest relative error max_i |a_i - n_i| / max(|a_i|, |n_i|,
// floor) between analytic and numeric gradients over all `inputs`.  The
// scalar under test is sum(f(inputs) * probe) with a random probe tensor so
// that every output element carries a distinct weight.
inline double MaxGradientError(
    const std::function<TensorD(const std::vector<TensorD> &)> &f,
    std::vector<TensorD> inputs, Rng &rng, double step = 1e-4,
    double floor = 1e-6) {
  TensorD probe;
  auto scalar = [&](const std::vector<TensorD> &in) -> TensorD {
    TensorD out = f(in);
    if (!probe.defined()) probe = RandomTensor(out.shape(), rng, 1.0, false);
    return Sum(Mul(out, probe));
  };
  for (auto &t : inputs) t.ClearGrad();
  scalar(inputs).Backward();

  double worst = 0.0;
  for (auto &t : inputs) {
    if (!t.requires_grad()) continue;
    const Eigen::ArrayXd analytic = t.grad();
    for (Eigen::Index i = 0; i < t.size(); i++) {
      const double saved = t.data()[i];
      t.mutable_data()[i] = saved + step;
      const double up = scalar(inputs).item();
      t.mutable_data()[i] = saved - step;
      const double down = scalar(inputs).item();
      t.mutable_data()[i] = saved;
      const double numeric = (up - down) / (2 * step);
      const double denom =
          std::max({std::abs(analytic[i]), std::abs(numeric), floor});
      worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
    }
  }
  return worst;
}

}  // namespace testing
}  // namespace uen

#endif  // UEN_TESTS_GRADIENT_CHECK_H_
