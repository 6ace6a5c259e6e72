// uen/cyclegan/losses.h

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

#ifndef UEN_CYCLEGAN_LOSSES_H_
#define UEN_CYCLEGAN_LOSSES_H_

#include "uen/autodiff/ops.h"
#include "uen/autodiff/tensor.h"

namespace uen {

// Least-squares GAN objectives over patch maps; every mean runs over all
// patch entries of the batch.
template <typename Real>
struct LsganLossPair {
  Tensor<Real> disc_loss;     // mean((d_real - 1)^2) + mean(d_fake^2)
  Tensor<Real> gen_adv_loss;  // mean((d_fake - 1)^2)
};

template <typename Real>
Tensor<Real> DiscriminatorLoss(const Tensor<Real> &d_real,
                               const Tensor<Real> &d_fake) {
  const Tensor<Real> one = Tensor<Real>::Full(d_real.shape(), Real(1));
  const Tensor<Real> zero(d_fake.shape());
  return Add(MseLoss(d_real, one), MseLoss(d_fake, zero));
}

template <typename Real>
Tensor<Real> GeneratorAdversarialLoss(const Tensor<Real> &d_fake) {
  return MseLoss(d_fake, Tensor<Real>::Full(d_fake.shape(), Real(1)));
}

template <typename Real>
LsganLossPair<Real> LsganLosses(const Tensor<Real> &d_real,
                                const Tensor<Real> &d_fake) {
  return {DiscriminatorLoss(d_real, d_fake), GeneratorAdversarialLoss(d_fake)};
}

// L1(t2s(s2t(x_s)), x_s) + L1(s2t(t2s(x_t)), x_t).  The mappings are any
// callables Tensor -> Tensor, typically Generator::Forward.
template <typename Real, typename S2T, typename T2S>
Tensor<Real> CycleLoss(const Tensor<Real> &x_s, const Tensor<Real> &x_t,
                       const S2T &s2t, const T2S &t2s) {
  return Add(L1Loss(t2s(s2t(x_s)), x_s), L1Loss(s2t(t2s(x_t)), x_t));
}

}  // namespace uen

#endif  // UEN_CYCLEGAN_LOSSES_H_
