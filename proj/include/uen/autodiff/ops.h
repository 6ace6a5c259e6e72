// uen/autodiff/ops.h

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

#ifndef UEN_AUTODIFF_OPS_H_
#define UEN_AUTODIFF_OPS_H_

#include "uen/autodiff/tensor.h"

namespace uen {

enum class Padding {
  kSame,   // zero fill; output extent = ceil(in / stride)
  kValid,  // no padding; output extent = (in - k) / stride + 1
};

// Spatial bookkeeping for one 2-D convolution.  For kSame the total padding
// is max((out - 1) * stride + k - in, 0), split with the smaller half on the
// top/left side.
struct ConvGeometry {
  int64_t in_h = 0, in_w = 0;
  int64_t kernel_h = 0, kernel_w = 0;
  int stride = 1;
  int64_t pad_top = 0, pad_left = 0;
  int64_t out_h = 0, out_w = 0;
};

ConvGeometry MakeConvGeometry(int64_t in_h, int64_t in_w, int64_t kernel_h,
                              int64_t kernel_w, int stride, Padding padding);

// input [N,C,H,W], weight [K,C,kh,kw], bias [K] (may be undefined).
template <typename Real>
Tensor<Real> Conv2d(const Tensor<Real> &input, const Tensor<Real> &weight,
                    const Tensor<Real> &bias, int stride, Padding padding);

// Adjoint of Conv2d with respect to its input.  input [N,C,H,W], weight
// [C,K,kh,kw] (same layout as the Conv2d weight that maps K -> C), bias [K].
// Output spatial extent is H*stride under kSame and (H-1)*stride+k under
// kValid.
template <typename Real>
Tensor<Real> ConvTranspose2d(const Tensor<Real> &input,
                             const Tensor<Real> &weight,
                             const Tensor<Real> &bias, int stride,
                             Padding padding);

// Per (n, c) slice normalization over H*W with biased variance.
template <typename Real>
Tensor<Real> InstanceNorm(const Tensor<Real> &input, const Tensor<Real> &gamma,
                          const Tensor<Real> &beta, Real eps = Real(1e-5));

template <typename Real>
Tensor<Real> Relu(const Tensor<Real> &input);

// x for x > 0, slope * x otherwise; derivative at exactly 0 is slope (0 for
// Relu).
template <typename Real>
Tensor<Real> LeakyRelu(const Tensor<Real> &input, Real slope);

// Mean-reduced losses; shapes must match exactly.
template <typename Real>
Tensor<Real> L1Loss(const Tensor<Real> &a, const Tensor<Real> &b);
template <typename Real>
Tensor<Real> MseLoss(const Tensor<Real> &a, const Tensor<Real> &b);

template <typename Real>
Tensor<Real> Add(const Tensor<Real> &a, const Tensor<Real> &b);
template <typename Real>
Tensor<Real> Sub(const Tensor<Real> &a, const Tensor<Real> &b);
// Elementwise product of equal shapes.
template <typename Real>
Tensor<Real> Mul(const Tensor<Real> &a, const Tensor<Real> &b);
template <typename Real>
Tensor<Real> MulScalar(const Tensor<Real> &a, Real scale);
template <typename Real>
Tensor<Real> AddScalar(const Tensor<Real> &a, Real offset);

template <typename Real>
Tensor<Real> Sum(const Tensor<Real> &a);
template <typename Real>
Tensor<Real> Mean(const Tensor<Real> &a);

// Zero padding on the last two axes of an [N,C,H,W] tensor.
template <typename Real>
Tensor<Real> Pad2d(const Tensor<Real> &input, int64_t top, int64_t bottom,
                   int64_t left, int64_t right);

// Window [top, top+height) x [left, left+width) of the last two axes.
template <typename Real>
Tensor<Real> Crop2d(const Tensor<Real> &input, int64_t top, int64_t left,
                    int64_t height, int64_t width);

}  // namespace uen

#endif  // UEN_AUTODIFF_OPS_H_
