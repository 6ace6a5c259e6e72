// uen/cyclegan/networks.h

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

#ifndef UEN_CYCLEGAN_NETWORKS_H_
#define UEN_CYCLEGAN_NETWORKS_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "uen/autodiff/ops.h"
#include "uen/autodiff/tensor.h"
#include "uen/base/random.h"

namespace uen {

template <typename Real>
using NamedTensors = std::vector<std::pair<std::string, Tensor<Real>>>;

// Layer sizes of the residual encoder/decoder generator.  Defaults are the
// full-size network; tests shrink the widths.
struct GeneratorSpec {
  int feature_dim = 40;
  std::array<int, 3> encoder_filters = {32, 64, 128};
  std::array<int, 3> encoder_strides = {1, 2, 2};
  int residual_blocks = 9;
  std::array<int, 2> decoder_filters = {64, 32};
  int kernel = 3;

  // Spatial extents are padded up to a multiple of this before encoding.
  int Downsampling() const {
    return encoder_strides[0] * encoder_strides[1] * encoder_strides[2];
  }
};

struct DiscriminatorSpec {
  std::array<int, 5> filters = {64, 128, 256, 512, 1};
  std::array<int, 5> strides = {2, 2, 2, 1, 1};
  int kernel = 4;
  double leaky_slope = 0.2;
  int min_extent = 8;
};

// Closed-form parameter counts (conv weights + biases + instance-norm
// gamma/beta) for the given specs.
int64_t GeneratorParameterCount(const GeneratorSpec &spec);
int64_t DiscriminatorParameterCount(const DiscriminatorSpec &spec);

template <typename Real>
struct ConvLayer {
  Tensor<Real> weight;
  Tensor<Real> bias;
};

template <typename Real>
struct NormLayer {
  Tensor<Real> gamma;
  Tensor<Real> beta;
};

/**
   Generator: conv(32, s1) -> conv(64, s2) -> conv(128, s2) -> 9 residual
   blocks [conv-IN-ReLU-conv-IN + skip] -> deconv(64, s2) -> deconv(32, s2)
   -> conv(1, s1), 3x3 kernels with zero "same" padding throughout.
   Instance norm and ReLU follow every layer except the first (ReLU only) and
   the last (neither).  The network output is added to the input.

   Input [N, 1, F, T] with F == spec.feature_dim and T >= Downsampling();
   both axes are zero-padded to a multiple of Downsampling() internally and
   the result is cropped back, so the output shape equals the input shape.

   Weights start at N(0, 0.02), biases and beta at 0, gamma at 1.  The last
   conv starts at exactly zero, which makes a fresh generator the identity.
*/
template <typename Real>
class Generator {
 public:
  Generator(const GeneratorSpec &spec, Rng &rng);

  Tensor<Real> Forward(const Tensor<Real> &input) const;
  // The part of Forward() that is added to the input.
  Tensor<Real> ResidualBranch(const Tensor<Real> &input) const;

  const GeneratorSpec &spec() const { return spec_; }
  NamedTensors<Real> NamedParameters() const;
  std::vector<Tensor<Real>> Parameters() const;
  int64_t ParameterCount() const;

 private:
  GeneratorSpec spec_;
  std::vector<ConvLayer<Real>> encoder_;
  std::vector<NormLayer<Real>> encoder_norms_;  // layers 2 and 3
  std::vector<std::array<ConvLayer<Real>, 2>> res_convs_;
  std::vector<std::array<NormLayer<Real>, 2>> res_norms_;
  std::vector<ConvLayer<Real>> decoder_;
  std::vector<NormLayer<Real>> decoder_norms_;
  ConvLayer<Real> output_;
};

/**
   PatchGAN-style discriminator: five 4x4 convolutions with strides
   (2, 2, 2, 1, 1) and filters (64, 128, 256, 512, 1), LeakyReLU(0.2) after
   all but the last.  Output is a 1-channel patch map, e.g. (40, 127) ->
   (5, 16).
*/
template <typename Real>
class Discriminator {
 public:
  Discriminator(const DiscriminatorSpec &spec, Rng &rng);

  // Throws DimensionError if either spatial extent is below min_extent.
  Tensor<Real> Forward(const Tensor<Real> &input) const;

  const DiscriminatorSpec &spec() const { return spec_; }
  NamedTensors<Real> NamedParameters() const;
  std::vector<Tensor<Real>> Parameters() const;
  int64_t ParameterCount() const;

 private:
  DiscriminatorSpec spec_;
  std::vector<ConvLayer<Real>> layers_;
};

extern template class Generator<float>;
extern template class Generator<double>;
extern template class Discriminator<float>;
extern template class Discriminator<double>;

}  // namespace uen

#endif  // UEN_CYCLEGAN_NETWORKS_H_
