// src/cyclegan/networks.cc

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

#include "uen/cyclegan/networks.h"

#include "uen/base/errors.h"

namespace uen {

namespace {

constexpr double kInitStddev = 0.02;

template <typename Real>
Tensor<Real> Normal(const Shape &shape, double stddev, Rng &rng) {
  typename Tensor<Real>::Array values(NumElements(shape));
  for (Eigen::Index i = 0; i < values.size(); i++)
    values[i] = static_cast<Real>(stddev * StandardNormal(rng));
  return Tensor<Real>(shape, std::move(values), true);
}

template <typename Real>
ConvLayer<Real> MakeConv(int64_t in, int64_t out, int kernel, Rng &rng,
                         bool transposed = false, bool zero = false) {
  const Shape shape = transposed ? Shape{in, out, kernel, kernel}
                                 : Shape{out, in, kernel, kernel};
  ConvLayer<Real> layer;
  layer.weight = zero ? Tensor<Real>(shape, true)
                      : Normal<Real>(shape, kInitStddev, rng);
  layer.bias = Tensor<Real>({out}, true);
  return layer;
}

template <typename Real>
NormLayer<Real> MakeNorm(int64_t channels) {
  return {Tensor<Real>::Full({channels}, Real(1), true),
          Tensor<Real>({channels}, true)};
}

template <typename Real>
void AddConv(const std::string &name, const ConvLayer<Real> &layer,
             NamedTensors<Real> *out) {
  out->emplace_back(name + ".weight", layer.weight);
  out->emplace_back(name + ".bias", layer.bias);
}

template <typename Real>
void AddNorm(const std::string &name, const NormLayer<Real> &layer,
             NamedTensors<Real> *out) {
  out->emplace_back(name + ".gamma", layer.gamma);
  out->emplace_back(name + ".beta", layer.beta);
}

template <typename Real>
std::vector<Tensor<Real>> Values(const NamedTensors<Real> &named) {
  std::vector<Tensor<Real>> out;
  for (const auto &[name, t] : named) out.push_back(t);
  return out;
}

template <typename Real>
int64_t Count(const NamedTensors<Real> &named) {
  int64_t n = 0;
  for (const auto &[name, t] : named) n += t.size();
  return n;
}

int64_t ConvCount(int64_t in, int64_t out, int kernel) {
  return in * out * kernel * kernel + out;
}

}  // namespace

int64_t GeneratorParameterCount(const GeneratorSpec &s) {
  const auto &e = s.encoder_filters;
  const auto &d = s.decoder_filters;
  const int k = s.kernel;
  int64_t n = ConvCount(1, e[0], k);
  n += ConvCount(e[0], e[1], k) + 2 * e[1];
  n += ConvCount(e[1], e[2], k) + 2 * e[2];
  n += s.residual_blocks * 2 * (ConvCount(e[2], e[2], k) + 2 * e[2]);
  n += ConvCount(e[2], d[0], k) + 2 * d[0];
  n += ConvCount(d[0], d[1], k) + 2 * d[1];
  n += ConvCount(d[1], 1, k);
  return n;
}

int64_t DiscriminatorParameterCount(const DiscriminatorSpec &s) {
  int64_t n = 0, in = 1;
  for (int f : s.filters) {
    n += ConvCount(in, f, s.kernel);
    in = f;
  }
  return n;
}

template <typename Real>
Generator<Real>::Generator(const GeneratorSpec &spec, Rng &rng) : spec_(spec) {
  const auto &e = spec.encoder_filters;
  const auto &d = spec.decoder_filters;
  const int k = spec.kernel;
  encoder_.push_back(MakeConv<Real>(1, e[0], k, rng));
  encoder_.push_back(MakeConv<Real>(e[0], e[1], k, rng));
  encoder_.push_back(MakeConv<Real>(e[1], e[2], k, rng));
  encoder_norms_.push_back(MakeNorm<Real>(e[1]));
  encoder_norms_.push_back(MakeNorm<Real>(e[2]));
  for (int b = 0; b < spec.residual_blocks; b++) {
    res_convs_.push_back(
        {MakeConv<Real>(e[2], e[2], k, rng), MakeConv<Real>(e[2], e[2], k, rng)});
    res_norms_.push_back({MakeNorm<Real>(e[2]), MakeNorm<Real>(e[2])});
  }
  decoder_.push_back(MakeConv<Real>(e[2], d[0], k, rng, true));
  decoder_.push_back(MakeConv<Real>(d[0], d[1], k, rng, true));
  decoder_norms_.push_back(MakeNorm<Real>(d[0]));
  decoder_norms_.push_back(MakeNorm<Real>(d[1]));
  output_ = MakeConv<Real>(d[1], 1, k, rng, false, true);
}

template <typename Real>
Tensor<Real> Generator<Real>::ResidualBranch(const Tensor<Real> &input) const {
  if (input.ndim() != 4 || input.dim(1) != 1)
    UEN_THROW(DimensionError, "generator expects [N,1,F,T], got ",
              ShapeToString(input.shape()));
  if (input.dim(2) != spec_.feature_dim)
    UEN_THROW(DimensionError, "generator expects F = ", spec_.feature_dim,
              ", got ", input.dim(2));
  const int64_t mult = spec_.Downsampling();
  const int64_t f = input.dim(2), t = input.dim(3);
  if (t < mult)
    UEN_THROW(DimensionError, "generator needs at least ", mult,
              " frames, got ", t);
  const int64_t pad_f = (mult - f % mult) % mult;
  const int64_t pad_t = (mult - t % mult) % mult;

  Tensor<Real> h = Pad2d(input, 0, pad_f, 0, pad_t);
  const auto &strides = spec_.encoder_strides;
  h = Relu(Conv2d(h, encoder_[0].weight, encoder_[0].bias, strides[0],
                  Padding::kSame));
  for (int i = 1; i < 3; i++) {
    h = Conv2d(h, encoder_[i].weight, encoder_[i].bias, strides[i],
               Padding::kSame);
    h = Relu(InstanceNorm(h, encoder_norms_[i - 1].gamma,
                          encoder_norms_[i - 1].beta));
  }
  for (size_t b = 0; b < res_convs_.size(); b++) {
    const auto &c = res_convs_[b];
    const auto &n = res_norms_[b];
    Tensor<Real> r = Conv2d(h, c[0].weight, c[0].bias, 1, Padding::kSame);
    r = Relu(InstanceNorm(r, n[0].gamma, n[0].beta));
    r = Conv2d(r, c[1].weight, c[1].bias, 1, Padding::kSame);
    r = InstanceNorm(r, n[1].gamma, n[1].beta);
    h = Add(h, r);
  }
  for (int i = 0; i < 2; i++) {
    h = ConvTranspose2d(h, decoder_[i].weight, decoder_[i].bias, 2,
                        Padding::kSame);
    h = Relu(InstanceNorm(h, decoder_norms_[i].gamma, decoder_norms_[i].beta));
  }
  h = Conv2d(h, output_.weight, output_.bias, 1, Padding::kSame);
  return Crop2d(h, 0, 0, f, t);
}

template <typename Real>
Tensor<Real> Generator<Real>::Forward(const Tensor<Real> &input) const {
  return Add(input, ResidualBranch(input));
}

template <typename Real>
NamedTensors<Real> Generator<Real>::NamedParameters() const {
  NamedTensors<Real> out;
  AddConv("enc1", encoder_[0], &out);
  AddConv("enc2", encoder_[1], &out);
  AddNorm("enc2.norm", encoder_norms_[0], &out);
  AddConv("enc3", encoder_[2], &out);
  AddNorm("enc3.norm", encoder_norms_[1], &out);
  for (size_t b = 0; b < res_convs_.size(); b++) {
    const std::string base = "res" + std::to_string(b + 1);
    AddConv(base + ".conv1", res_convs_[b][0], &out);
    AddNorm(base + ".norm1", res_norms_[b][0], &out);
    AddConv(base + ".conv2", res_convs_[b][1], &out);
    AddNorm(base + ".norm2", res_norms_[b][1], &out);
  }
  AddConv("dec1", decoder_[0], &out);
  AddNorm("dec1.norm", decoder_norms_[0], &out);
  AddConv("dec2", decoder_[1], &out);
  AddNorm("dec2.norm", decoder_norms_[1], &out);
  AddConv("out", output_, &out);
  return out;
}

template <typename Real>
std::vector<Tensor<Real>> Generator<Real>::Parameters() const {
  return Values(NamedParameters());
}

template <typename Real>
int64_t Generator<Real>::ParameterCount() const {
  return Count(NamedParameters());
}

template <typename Real>
Discriminator<Real>::Discriminator(const DiscriminatorSpec &spec, Rng &rng)
    : spec_(spec) {
  int64_t in = 1;
  for (int f : spec.filters) {
    layers_.push_back(MakeConv<Real>(in, f, spec.kernel, rng));
    in = f;
  }
}

template <typename Real>
Tensor<Real> Discriminator<Real>::Forward(const Tensor<Real> &input) const {
  if (input.ndim() != 4 || input.dim(1) != 1)
    UEN_THROW(DimensionError, "discriminator expects [N,1,F,T], got ",
              ShapeToString(input.shape()));
  if (input.dim(2) < spec_.min_extent || input.dim(3) < spec_.min_extent)
    UEN_THROW(DimensionError, "discriminator input ",
              ShapeToString(input.shape()), " is below the minimum extent ",
              spec_.min_extent);
  const Real slope = static_cast<Real>(spec_.leaky_slope);
  Tensor<Real> h = input;
  for (size_t i = 0; i < layers_.size(); i++) {
    h = Conv2d(h, layers_[i].weight, layers_[i].bias, spec_.strides[i],
               Padding::kSame);
    if (i + 1 < layers_.size()) h = LeakyRelu(h, slope);
  }
  return h;
}

template <typename Real>
NamedTensors<Real> Discriminator<Real>::NamedParameters() const {
  NamedTensors<Real> out;
  for (size_t i = 0; i < layers_.size(); i++)
    AddConv("conv" + std::to_string(i + 1), layers_[i], &out);
  return out;
}

template <typename Real>
std::vector<Tensor<Real>> Discriminator<Real>::Parameters() const {
  return Values(NamedParameters());
}

template <typename Real>
int64_t Discriminator<Real>::ParameterCount() const {
  return Count(NamedParameters());
}

template class Generator<float>;
template class Generator<double>;
template class Discriminator<float>;
template class Discriminator<double>;

}  // namespace uen
