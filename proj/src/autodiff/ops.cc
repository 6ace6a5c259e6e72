// src/autodiff/ops.cc

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

#include "uen/autodiff/ops.h"

#include <cmath>

#include "uen/base/errors.h"

namespace uen {

namespace {

template <typename Real>
using RowMatrix =
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Parent i if it wants a gradient, else nullptr.
template <typename Real>
internal::Node<Real> *GradTarget(internal::Node<Real> &self, size_t i) {
  auto &p = self.parents[i];
  return (p && p->requires_grad) ? p.get() : nullptr;
}

void CheckSameShape(const Shape &a, const Shape &b, const char *op) {
  if (a != b)
    UEN_THROW(DimensionError, op, ": shape mismatch ", ShapeToString(a),
              " vs ", ShapeToString(b));
}

void CheckRank(const Shape &s, size_t rank, const char *what) {
  if (s.size() != rank)
    UEN_THROW(DimensionError, what, " must have rank ", rank, ", got ",
              ShapeToString(s));
}

// col is row-major [channels*kh*kw, batch*out_h*out_w].
template <typename Real>
void Im2Col(const Real *x, int64_t batch, int64_t channels,
            const ConvGeometry &g, Real *col) {
  const int64_t plane = g.in_h * g.in_w;
  const int64_t out_plane = g.out_h * g.out_w;
  const int64_t row_len = batch * out_plane;
  for (int64_t c = 0; c < channels; c++) {
    for (int64_t ki = 0; ki < g.kernel_h; ki++) {
      for (int64_t kj = 0; kj < g.kernel_w; kj++) {
        Real *row = col + ((c * g.kernel_h + ki) * g.kernel_w + kj) * row_len;
        for (int64_t n = 0; n < batch; n++) {
          const Real *src = x + (n * channels + c) * plane;
          Real *dst = row + n * out_plane;
          for (int64_t oh = 0; oh < g.out_h; oh++) {
            const int64_t ih = oh * g.stride - g.pad_top + ki;
            Real *out_row = dst + oh * g.out_w;
            if (ih < 0 || ih >= g.in_h) {
              std::fill(out_row, out_row + g.out_w, Real(0));
              continue;
            }
            const Real *in_row = src + ih * g.in_w;
            for (int64_t ow = 0; ow < g.out_w; ow++) {
              const int64_t iw = ow * g.stride - g.pad_left + kj;
              out_row[ow] = (iw >= 0 && iw < g.in_w) ? in_row[iw] : Real(0);
            }
          }
        }
      }
    }
  }
}

// Scatter-add transpose of Im2Col.
template <typename Real>
void Col2Im(const Real *col, int64_t batch, int64_t channels,
            const ConvGeometry &g, Real *x) {
  const int64_t plane = g.in_h * g.in_w;
  const int64_t out_plane = g.out_h * g.out_w;
  const int64_t row_len = batch * out_plane;
  for (int64_t c = 0; c < channels; c++) {
    for (int64_t ki = 0; ki < g.kernel_h; ki++) {
      for (int64_t kj = 0; kj < g.kernel_w; kj++) {
        const Real *row =
            col + ((c * g.kernel_h + ki) * g.kernel_w + kj) * row_len;
        for (int64_t n = 0; n < batch; n++) {
          Real *dst = x + (n * channels + c) * plane;
          const Real *src = row + n * out_plane;
          for (int64_t oh = 0; oh < g.out_h; oh++) {
            const int64_t ih = oh * g.stride - g.pad_top + ki;
            if (ih < 0 || ih >= g.in_h) continue;
            Real *in_row = dst + ih * g.in_w;
            const Real *out_row = src + oh * g.out_w;
            for (int64_t ow = 0; ow < g.out_w; ow++) {
              const int64_t iw = ow * g.stride - g.pad_left + kj;
              if (iw >= 0 && iw < g.in_w) in_row[iw] += out_row[ow];
            }
          }
        }
      }
    }
  }
}

// [N, C, P] buffer <-> [C, N*P] matrix.
template <typename Real>
RowMatrix<Real> ChannelsFirst(const Real *x, int64_t batch, int64_t channels,
                              int64_t plane) {
  RowMatrix<Real> m(channels, batch * plane);
  for (int64_t n = 0; n < batch; n++)
    for (int64_t c = 0; c < channels; c++)
      std::copy(x + (n * channels + c) * plane,
                x + (n * channels + c + 1) * plane,
                m.data() + c * batch * plane + n * plane);
  return m;
}

template <typename Real>
void AddBatchFirst(const RowMatrix<Real> &m, int64_t batch, int64_t channels,
                   int64_t plane, Real *x) {
  for (int64_t n = 0; n < batch; n++)
    for (int64_t c = 0; c < channels; c++) {
      const Real *src = m.data() + c * batch * plane + n * plane;
      Real *dst = x + (n * channels + c) * plane;
      for (int64_t p = 0; p < plane; p++) dst[p] += src[p];
    }
}

template <typename Real>
void AddBias(const Tensor<Real> &bias, int64_t batch, int64_t channels,
             int64_t plane, Real *out) {
  if (!bias.defined()) return;
  if (bias.shape() != Shape{channels})
    UEN_THROW(DimensionError, "bias shape ", ShapeToString(bias.shape()),
              " does not match ", channels, " output channels");
  const Real *b = bias.data().data();
  for (int64_t n = 0; n < batch; n++)
    for (int64_t c = 0; c < channels; c++) {
      Real *dst = out + (n * channels + c) * plane;
      for (int64_t p = 0; p < plane; p++) dst[p] += b[c];
    }
}

template <typename Real>
void AccumulateBiasGrad(const Real *grad_out, int64_t batch, int64_t channels,
                        int64_t plane, Real *grad_bias) {
  for (int64_t n = 0; n < batch; n++)
    for (int64_t c = 0; c < channels; c++) {
      const Real *src = grad_out + (n * channels + c) * plane;
      Real acc = 0;
      for (int64_t p = 0; p < plane; p++) acc += src[p];
      grad_bias[c] += acc;
    }
}

}  // namespace

ConvGeometry MakeConvGeometry(int64_t in_h, int64_t in_w, int64_t kernel_h,
                              int64_t kernel_w, int stride, Padding padding) {
  if (stride < 1) UEN_THROW(InputError, "stride must be >= 1, got ", stride);
  if (kernel_h < 1 || kernel_w < 1)
    UEN_THROW(DimensionError, "empty convolution kernel");
  ConvGeometry g;
  g.in_h = in_h;
  g.in_w = in_w;
  g.kernel_h = kernel_h;
  g.kernel_w = kernel_w;
  g.stride = stride;
  if (padding == Padding::kSame) {
    g.out_h = (in_h + stride - 1) / stride;
    g.out_w = (in_w + stride - 1) / stride;
    const int64_t pad_h =
        std::max<int64_t>((g.out_h - 1) * stride + kernel_h - in_h, 0);
    const int64_t pad_w =
        std::max<int64_t>((g.out_w - 1) * stride + kernel_w - in_w, 0);
    g.pad_top = pad_h / 2;
    g.pad_left = pad_w / 2;
    if (kernel_h > in_h + pad_h || kernel_w > in_w + pad_w)
      UEN_THROW(DimensionError, "kernel larger than padded input");
  } else {
    if (kernel_h > in_h || kernel_w > in_w)
      UEN_THROW(DimensionError, "kernel ", kernel_h, "x", kernel_w,
                " larger than input ", in_h, "x", in_w);
    g.out_h = (in_h - kernel_h) / stride + 1;
    g.out_w = (in_w - kernel_w) / stride + 1;
  }
  if (g.out_h < 1 || g.out_w < 1)
    UEN_THROW(DimensionError, "convolution produces an empty output");
  return g;
}

template <typename Real>
Tensor<Real> Conv2d(const Tensor<Real> &input, const Tensor<Real> &weight,
                    const Tensor<Real> &bias, int stride, Padding padding) {
  CheckRank(input.shape(), 4, "conv2d input");
  CheckRank(weight.shape(), 4, "conv2d weight");
  const int64_t batch = input.dim(0), channels = input.dim(1);
  const int64_t filters = weight.dim(0);
  if (weight.dim(1) != channels)
    UEN_THROW(DimensionError, "conv2d: weight expects ", weight.dim(1),
              " input channels, input has ", channels);
  const ConvGeometry g = MakeConvGeometry(input.dim(2), input.dim(3),
                                          weight.dim(2), weight.dim(3),
                                          stride, padding);
  const int64_t plane = g.out_h * g.out_w;
  const int64_t patch = channels * g.kernel_h * g.kernel_w;

  RowMatrix<Real> col(patch, batch * plane);
  Im2Col(input.data().data(), batch, channels, g, col.data());
  Eigen::Map<const RowMatrix<Real>> w(weight.data().data(), filters, patch);
  RowMatrix<Real> y = w * col;

  typename Tensor<Real>::Array out =
      Tensor<Real>::Array::Zero(batch * filters * plane);
  AddBatchFirst(y, batch, filters, plane, out.data());
  AddBias(bias, batch, filters, plane, out.data());

  auto backward = [g, batch, channels, filters, plane,
                   patch](internal::Node<Real> &self) {
    auto *x_node = GradTarget(self, 0);
    auto *w_node = GradTarget(self, 1);
    auto *b_node = GradTarget(self, 2);
    const RowMatrix<Real> dy =
        ChannelsFirst(self.grad.data(), batch, filters, plane);
    Eigen::Map<const RowMatrix<Real>> w(self.parents[1]->data.data(), filters,
                                        patch);
    if (x_node) {
      const RowMatrix<Real> dcol = w.transpose() * dy;
      Col2Im(dcol.data(), batch, channels, g, x_node->EnsureGrad().data());
    }
    if (w_node) {
      RowMatrix<Real> col(patch, batch * plane);
      Im2Col(self.parents[0]->data.data(), batch, channels, g, col.data());
      Eigen::Map<RowMatrix<Real>> dw(w_node->EnsureGrad().data(), filters,
                                     patch);
      dw.noalias() += dy * col.transpose();
    }
    if (b_node)
      AccumulateBiasGrad(self.grad.data(), batch, filters, plane,
                         b_node->EnsureGrad().data());
  };
  return Tensor<Real>::MakeResult({batch, filters, g.out_h, g.out_w},
                                  std::move(out), {input, weight, bias},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> ConvTranspose2d(const Tensor<Real> &input,
                             const Tensor<Real> &weight,
                             const Tensor<Real> &bias, int stride,
                             Padding padding) {
  CheckRank(input.shape(), 4, "conv_transpose2d input");
  CheckRank(weight.shape(), 4, "conv_transpose2d weight");
  if (stride < 1) UEN_THROW(InputError, "stride must be >= 1, got ", stride);
  const int64_t batch = input.dim(0), channels = input.dim(1);
  const int64_t in_h = input.dim(2), in_w = input.dim(3);
  if (weight.dim(0) != channels)
    UEN_THROW(DimensionError, "conv_transpose2d: weight expects ",
              weight.dim(0), " input channels, input has ", channels);
  const int64_t filters = weight.dim(1);
  const int64_t kh = weight.dim(2), kw = weight.dim(3);
  int64_t out_h, out_w;
  if (padding == Padding::kSame) {
    out_h = in_h * stride;
    out_w = in_w * stride;
  } else {
    out_h = (in_h - 1) * stride + kh;
    out_w = (in_w - 1) * stride + kw;
  }
  // Geometry of the forward convolution this op is the adjoint of.
  const ConvGeometry g =
      MakeConvGeometry(out_h, out_w, kh, kw, stride, padding);
  if (g.out_h != in_h || g.out_w != in_w)
    UEN_THROW(DimensionError, "conv_transpose2d: inconsistent geometry");
  const int64_t plane = in_h * in_w;
  const int64_t patch = filters * kh * kw;

  const RowMatrix<Real> x =
      ChannelsFirst(input.data().data(), batch, channels, plane);
  Eigen::Map<const RowMatrix<Real>> w(weight.data().data(), channels, patch);
  const RowMatrix<Real> col = w.transpose() * x;
  typename Tensor<Real>::Array out =
      Tensor<Real>::Array::Zero(batch * filters * out_h * out_w);
  Col2Im(col.data(), batch, filters, g, out.data());
  AddBias(bias, batch, filters, out_h * out_w, out.data());

  auto backward = [g, batch, channels, filters, plane, patch, out_h,
                   out_w](internal::Node<Real> &self) {
    auto *x_node = GradTarget(self, 0);
    auto *w_node = GradTarget(self, 1);
    auto *b_node = GradTarget(self, 2);
    RowMatrix<Real> dcol(patch, batch * plane);
    Im2Col(self.grad.data(), batch, filters, g, dcol.data());
    Eigen::Map<const RowMatrix<Real>> w(self.parents[1]->data.data(),
                                        channels, patch);
    if (x_node) {
      const RowMatrix<Real> dx = w * dcol;
      AddBatchFirst(dx, batch, channels, plane, x_node->EnsureGrad().data());
    }
    if (w_node) {
      const RowMatrix<Real> x =
          ChannelsFirst(self.parents[0]->data.data(), batch, channels, plane);
      Eigen::Map<RowMatrix<Real>> dw(w_node->EnsureGrad().data(), channels,
                                     patch);
      dw.noalias() += x * dcol.transpose();
    }
    if (b_node)
      AccumulateBiasGrad(self.grad.data(), batch, filters, out_h * out_w,
                         b_node->EnsureGrad().data());
  };
  return Tensor<Real>::MakeResult({batch, filters, out_h, out_w},
                                  std::move(out), {input, weight, bias},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> InstanceNorm(const Tensor<Real> &input, const Tensor<Real> &gamma,
                          const Tensor<Real> &beta, Real eps) {
  CheckRank(input.shape(), 4, "instance_norm input");
  const int64_t batch = input.dim(0), channels = input.dim(1);
  const int64_t plane = input.dim(2) * input.dim(3);
  if (plane < 1) UEN_THROW(DimensionError, "instance_norm on empty plane");
  if (gamma.shape() != Shape{channels} || beta.shape() != Shape{channels})
    UEN_THROW(DimensionError, "instance_norm: gamma/beta must have shape (",
              channels, ")");
  using Array = typename Tensor<Real>::Array;
  Array out(input.size());
  Array inv_std(batch * channels);
  const Real *x = input.data().data();
  for (int64_t s = 0; s < batch * channels; s++) {
    const int64_t c = s % channels;
    Eigen::Map<const Array> xs(x + s * plane, plane);
    const Real mean = xs.mean();
    const Real var = (xs - mean).square().mean();
    inv_std[s] = Real(1) / std::sqrt(var + eps);
    Eigen::Map<Array>(out.data() + s * plane, plane) =
        (xs - mean) * (inv_std[s] * gamma.data()[c]) + beta.data()[c];
  }

  auto backward = [batch, channels, plane,
                   inv_std](internal::Node<Real> &self) {
    auto *x_node = GradTarget(self, 0);
    auto *g_node = GradTarget(self, 1);
    auto *b_node = GradTarget(self, 2);
    const Real *x = self.parents[0]->data.data();
    const Real *gamma = self.parents[1]->data.data();
    for (int64_t s = 0; s < batch * channels; s++) {
      const int64_t c = s % channels;
      Eigen::Map<const Array> xs(x + s * plane, plane);
      Eigen::Map<const Array> dy(self.grad.data() + s * plane, plane);
      const Array xhat = (xs - xs.mean()) * inv_std[s];
      if (g_node) g_node->EnsureGrad()[c] += (dy * xhat).sum();
      if (b_node) b_node->EnsureGrad()[c] += dy.sum();
      if (x_node) {
        Eigen::Map<Array> dx(x_node->EnsureGrad().data() + s * plane, plane);
        dx += (gamma[c] * inv_std[s]) *
              (dy - dy.mean() - xhat * (dy * xhat).mean());
      }
    }
  };
  return Tensor<Real>::MakeResult(input.shape(), std::move(out),
                                  {input, gamma, beta}, std::move(backward));
}

template <typename Real>
Tensor<Real> LeakyRelu(const Tensor<Real> &input, Real slope) {
  const auto &x = input.data();
  typename Tensor<Real>::Array out = (x > Real(0)).select(x, slope * x);
  auto backward = [slope](internal::Node<Real> &self) {
    auto *x_node = GradTarget(self, 0);
    if (!x_node) return;
    const auto &xp = x_node->data;
    x_node->EnsureGrad() += (xp > Real(0)).select(self.grad, slope * self.grad);
  };
  return Tensor<Real>::MakeResult(input.shape(), std::move(out), {input},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> Relu(const Tensor<Real> &input) {
  return LeakyRelu(input, Real(0));
}

template <typename Real>
Tensor<Real> L1Loss(const Tensor<Real> &a, const Tensor<Real> &b) {
  CheckSameShape(a.shape(), b.shape(), "l1_loss");
  const Real n = static_cast<Real>(a.size());
  const Real value = (a.data() - b.data()).abs().sum() / n;
  auto backward = [n](internal::Node<Real> &self) {
    const Real g = self.grad[0] / n;
    auto *a_node = GradTarget(self, 0);
    auto *b_node = GradTarget(self, 1);
    const auto sign = (self.parents[0]->data - self.parents[1]->data).sign();
    if (a_node) a_node->EnsureGrad() += g * sign;
    if (b_node) b_node->EnsureGrad() -= g * sign;
  };
  return Tensor<Real>::MakeResult({}, Tensor<Real>::Array::Constant(1, value),
                                  {a, b}, std::move(backward));
}

template <typename Real>
Tensor<Real> MseLoss(const Tensor<Real> &a, const Tensor<Real> &b) {
  CheckSameShape(a.shape(), b.shape(), "mse_loss");
  const Real n = static_cast<Real>(a.size());
  const Real value = (a.data() - b.data()).square().sum() / n;
  auto backward = [n](internal::Node<Real> &self) {
    const Real g = Real(2) * self.grad[0] / n;
    auto *a_node = GradTarget(self, 0);
    auto *b_node = GradTarget(self, 1);
    const auto diff = self.parents[0]->data - self.parents[1]->data;
    if (a_node) a_node->EnsureGrad() += g * diff;
    if (b_node) b_node->EnsureGrad() -= g * diff;
  };
  return Tensor<Real>::MakeResult({}, Tensor<Real>::Array::Constant(1, value),
                                  {a, b}, std::move(backward));
}

template <typename Real>
Tensor<Real> Add(const Tensor<Real> &a, const Tensor<Real> &b) {
  CheckSameShape(a.shape(), b.shape(), "add");
  auto backward = [](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0)) p->EnsureGrad() += self.grad;
    if (auto *p = GradTarget(self, 1)) p->EnsureGrad() += self.grad;
  };
  return Tensor<Real>::MakeResult(a.shape(), a.data() + b.data(), {a, b},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> Sub(const Tensor<Real> &a, const Tensor<Real> &b) {
  CheckSameShape(a.shape(), b.shape(), "sub");
  auto backward = [](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0)) p->EnsureGrad() += self.grad;
    if (auto *p = GradTarget(self, 1)) p->EnsureGrad() -= self.grad;
  };
  return Tensor<Real>::MakeResult(a.shape(), a.data() - b.data(), {a, b},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> Mul(const Tensor<Real> &a, const Tensor<Real> &b) {
  CheckSameShape(a.shape(), b.shape(), "mul");
  auto backward = [](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0))
      p->EnsureGrad() += self.grad * self.parents[1]->data;
    if (auto *p = GradTarget(self, 1))
      p->EnsureGrad() += self.grad * self.parents[0]->data;
  };
  return Tensor<Real>::MakeResult(a.shape(), a.data() * b.data(), {a, b},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> MulScalar(const Tensor<Real> &a, Real scale) {
  auto backward = [scale](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0)) p->EnsureGrad() += scale * self.grad;
  };
  return Tensor<Real>::MakeResult(a.shape(), a.data() * scale, {a},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> AddScalar(const Tensor<Real> &a, Real offset) {
  auto backward = [](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0)) p->EnsureGrad() += self.grad;
  };
  return Tensor<Real>::MakeResult(a.shape(), a.data() + offset, {a},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> Sum(const Tensor<Real> &a) {
  auto backward = [](internal::Node<Real> &self) {
    if (auto *p = GradTarget(self, 0)) p->EnsureGrad() += self.grad[0];
  };
  return Tensor<Real>::MakeResult(
      {}, Tensor<Real>::Array::Constant(1, a.data().sum()), {a},
      std::move(backward));
}

template <typename Real>
Tensor<Real> Mean(const Tensor<Real> &a) {
  if (a.size() == 0) UEN_THROW(DimensionError, "mean of empty tensor");
  return MulScalar(Sum(a), Real(1) / static_cast<Real>(a.size()));
}

template <typename Real>
Tensor<Real> Pad2d(const Tensor<Real> &input, int64_t top, int64_t bottom,
                   int64_t left, int64_t right) {
  CheckRank(input.shape(), 4, "pad2d input");
  if (top < 0 || bottom < 0 || left < 0 || right < 0)
    UEN_THROW(DimensionError, "pad2d: negative padding");
  const int64_t slices = input.dim(0) * input.dim(1);
  const int64_t h = input.dim(2), w = input.dim(3);
  const int64_t oh = h + top + bottom, ow = w + left + right;
  typename Tensor<Real>::Array out =
      Tensor<Real>::Array::Zero(slices * oh * ow);
  const Real *x = input.data().data();
  for (int64_t s = 0; s < slices; s++)
    for (int64_t i = 0; i < h; i++)
      std::copy(x + (s * h + i) * w, x + (s * h + i + 1) * w,
                out.data() + (s * oh + i + top) * ow + left);
  auto backward = [slices, h, w, oh, ow, top,
                   left](internal::Node<Real> &self) {
    auto *p = GradTarget(self, 0);
    if (!p) return;
    Real *dx = p->EnsureGrad().data();
    const Real *dy = self.grad.data();
    for (int64_t s = 0; s < slices; s++)
      for (int64_t i = 0; i < h; i++)
        for (int64_t j = 0; j < w; j++)
          dx[(s * h + i) * w + j] += dy[(s * oh + i + top) * ow + left + j];
  };
  return Tensor<Real>::MakeResult({input.dim(0), input.dim(1), oh, ow},
                                  std::move(out), {input},
                                  std::move(backward));
}

template <typename Real>
Tensor<Real> Crop2d(const Tensor<Real> &input, int64_t top, int64_t left,
                    int64_t height, int64_t width) {
  CheckRank(input.shape(), 4, "crop2d input");
  const int64_t slices = input.dim(0) * input.dim(1);
  const int64_t h = input.dim(2), w = input.dim(3);
  if (top < 0 || left < 0 || height < 0 || width < 0 || top + height > h ||
      left + width > w)
    UEN_THROW(DimensionError, "crop2d window out of range for ",
              ShapeToString(input.shape()));
  typename Tensor<Real>::Array out(slices * height * width);
  const Real *x = input.data().data();
  for (int64_t s = 0; s < slices; s++)
    for (int64_t i = 0; i < height; i++)
      std::copy(x + (s * h + i + top) * w + left,
                x + (s * h + i + top) * w + left + width,
                out.data() + (s * height + i) * width);
  auto backward = [slices, h, w, top, left, height,
                   width](internal::Node<Real> &self) {
    auto *p = GradTarget(self, 0);
    if (!p) return;
    Real *dx = p->EnsureGrad().data();
    const Real *dy = self.grad.data();
    for (int64_t s = 0; s < slices; s++)
      for (int64_t i = 0; i < height; i++)
        for (int64_t j = 0; j < width; j++)
          dx[(s * h + i + top) * w + left + j] +=
              dy[(s * height + i) * width + j];
  };
  return Tensor<Real>::MakeResult({input.dim(0), input.dim(1), height, width},
                                  std::move(out), {input},
                                  std::move(backward));
}

#define UEN_INSTANTIATE_OPS(Real)                                             \
  template Tensor<Real> Conv2d(const Tensor<Real> &, const Tensor<Real> &,    \
                               const Tensor<Real> &, int, Padding);           \
  template Tensor<Real> ConvTranspose2d(const Tensor<Real> &,                 \
                                        const Tensor<Real> &,                 \
                                        const Tensor<Real> &, int, Padding);  \
  template Tensor<Real> InstanceNorm(const Tensor<Real> &,                    \
                                     const Tensor<Real> &,                    \
                                     const Tensor<Real> &, Real);             \
  template Tensor<Real> Relu(const Tensor<Real> &);                           \
  template Tensor<Real> LeakyRelu(const Tensor<Real> &, Real);                \
  template Tensor<Real> L1Loss(const Tensor<Real> &, const Tensor<Real> &);   \
  template Tensor<Real> MseLoss(const Tensor<Real> &, const Tensor<Real> &);  \
  template Tensor<Real> Add(const Tensor<Real> &, const Tensor<Real> &);      \
  template Tensor<Real> Sub(const Tensor<Real> &, const Tensor<Real> &);      \
  template Tensor<Real> Mul(const Tensor<Real> &, const Tensor<Real> &);      \
  template Tensor<Real> MulScalar(const Tensor<Real> &, Real);                \
  template Tensor<Real> AddScalar(const Tensor<Real> &, Real);                \
  template Tensor<Real> Sum(const Tensor<Real> &);                            \
  template Tensor<Real> Mean(const Tensor<Real> &);                           \
  template Tensor<Real> Pad2d(const Tensor<Real> &, int64_t, int64_t,         \
                              int64_t, int64_t);                              \
  template Tensor<Real> Crop2d(const Tensor<Real> &, int64_t, int64_t,        \
                               int64_t, int64_t);

UEN_INSTANTIATE_OPS(float)
UEN_INSTANTIATE_OPS(double)

}  // namespace uen
