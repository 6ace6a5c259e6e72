// tests/cyclegan-networks-test.cc

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

#include <set>

#include <gtest/gtest.h>

#include "gradient-check.h"
#include "uen/base/errors.h"
#include "uen/cyclegan/losses.h"

namespace uen {
namespace {

using testing::MaxGradientError;
using testing::RandomTensor;
using testing::TensorD;

// Layer table written out by hand: (in, out, kernel, has instance norm).
struct LayerRow {
  int64_t in, out, kernel;
  bool norm;
};

int64_t CountRows(const std::vector<LayerRow> &rows) {
  int64_t n = 0;
  for (const LayerRow &r : rows)
    n += r.in * r.out * r.kernel * r.kernel + r.out + (r.norm ? 2 * r.out : 0);
  return n;
}

std::vector<LayerRow> ReferenceGeneratorRows() {
  std::vector<LayerRow> rows = {{1, 32, 3, false}, {32, 64, 3, true},
                                {64, 128, 3, true}};
  for (int i = 0; i < 18; i++) rows.push_back({128, 128, 3, true});
  rows.push_back({128, 64, 3, true});
  rows.push_back({64, 32, 3, true});
  rows.push_back({32, 1, 3, false});
  return rows;
}

GeneratorSpec TinyGeneratorSpec() {
  GeneratorSpec s;
  s.feature_dim = 8;
  s.encoder_filters = {2, 3, 4};
  s.residual_blocks = 1;
  s.decoder_filters = {3, 2};
  return s;
}

DiscriminatorSpec TinyDiscriminatorSpec() {
  DiscriminatorSpec s;
  s.filters = {2, 3, 3, 2, 1};
  return s;
}

template <typename Real>
void RandomizeOutputLayer(const Generator<Real> &g, Rng &rng, double scale) {
  for (auto &[name, t] : g.NamedParameters())
    if (name == "out.weight" || name == "out.bias")
      for (Eigen::Index i = 0; i < t.size(); i++)
        t.mutable_data()[i] = static_cast<Real>(scale * StandardNormal(rng));
}

TEST(GeneratorTest, ParameterCountMatchesLayerTable) {
  const int64_t expected = CountRows(ReferenceGeneratorRows());
  EXPECT_EQ(expected, 2846913);
  Rng rng(1);
  Generator<float> g(GeneratorSpec(), rng);
  EXPECT_EQ(g.ParameterCount(), expected);
  EXPECT_EQ(GeneratorParameterCount(GeneratorSpec()), expected);
}

TEST(DiscriminatorTest, ParameterCountMatchesLayerTable) {
  const int64_t expected = CountRows({{1, 64, 4, false},
                                      {64, 128, 4, false},
                                      {128, 256, 4, false},
                                      {256, 512, 4, false},
                                      {512, 1, 4, false}});
  EXPECT_EQ(expected, 2762689);
  Rng rng(1);
  Discriminator<float> d(DiscriminatorSpec(), rng);
  EXPECT_EQ(d.ParameterCount(), expected);
  EXPECT_EQ(DiscriminatorParameterCount(DiscriminatorSpec()), expected);
}

TEST(GeneratorTest, ParameterNamesAreUnique) {
  Rng rng(1);
  Generator<float> g(GeneratorSpec(), rng);
  std::set<std::string> names;
  int64_t total = 0;
  for (const auto &[name, t] : g.NamedParameters()) {
    EXPECT_TRUE(names.insert(name).second) << name;
    total += t.size();
  }
  EXPECT_EQ(total, g.ParameterCount());
  EXPECT_EQ(names.count("res9.norm2.gamma"), 1u);
  EXPECT_EQ(names.count("enc1.norm.gamma"), 0u);
}

TEST(GeneratorTest, FreshGeneratorIsExactIdentity) {
  Rng rng(2);
  Generator<float> g(GeneratorSpec(), rng);
  for (int64_t t : {4, 100, 127, 255}) {
    const Tensor<float> x = Tensor<float>(
        {2, 1, 40, t},
        Eigen::ArrayXf::Random(2 * 40 * t) * 5.0f);
    const Tensor<float> y = g.Forward(x);
    ASSERT_EQ(y.shape(), x.shape());
    EXPECT_TRUE((y.data() == x.data()).all()) << "T=" << t;
  }
}

TEST(GeneratorTest, ShapePreservedWithTrainedOutputLayer) {
  Rng rng(3);
  Generator<float> g(GeneratorSpec(), rng);
  RandomizeOutputLayer(g, rng, 0.05);
  for (int64_t t : {4, 5, 100, 127, 255}) {
    const Tensor<float> x({1, 1, 40, t}, Eigen::ArrayXf::Random(40 * t));
    EXPECT_EQ(g.Forward(x).shape(), x.shape());
    EXPECT_GT((g.Forward(x).data() - x.data()).abs().maxCoeff(), 0.0f);
  }
}

TEST(GeneratorTest, DimensionErrors) {
  Rng rng(4);
  Generator<float> g(GeneratorSpec(), rng);
  EXPECT_THROW(g.Forward(Tensor<float>({1, 1, 39, 16})), DimensionError);
  EXPECT_THROW(g.Forward(Tensor<float>({1, 1, 40, 3})), DimensionError);
  EXPECT_THROW(g.Forward(Tensor<float>({1, 2, 40, 16})), DimensionError);
}

// Output extent of a stride-s "same" convolution is ceil(n / s).
int64_t TraceExtent(int64_t n, const std::vector<int> &strides) {
  for (int s : strides) n = (n + s - 1) / s;
  return n;
}

TEST(DiscriminatorTest, PatchMapShape) {
  EXPECT_EQ(TraceExtent(40, {2, 2, 2, 1, 1}), 5);
  EXPECT_EQ(TraceExtent(127, {2, 2, 2, 1, 1}), 16);
  Rng rng(5);
  Discriminator<float> d(DiscriminatorSpec(), rng);
  const Tensor<float> out = d.Forward(Tensor<float>({1, 1, 40, 127}));
  EXPECT_EQ(out.shape(), (Shape{1, 1, 5, 16}));
  const Tensor<float> wide = d.Forward(Tensor<float>({1, 1, 40, 254}));
  EXPECT_EQ(wide.shape(), (Shape{1, 1, 5, 32}));
}

TEST(DiscriminatorTest, ZeroNetworkGivesZeroMap) {
  Rng rng(6);
  Discriminator<float> d(DiscriminatorSpec(), rng);
  for (auto &[name, t] : d.NamedParameters()) t.mutable_data().setZero();
  const Tensor<float> out = d.Forward(Tensor<float>({2, 1, 40, 64}));
  EXPECT_TRUE((out.data() == 0.0f).all());
}

TEST(DiscriminatorTest, RejectsUndersizedInput) {
  Rng rng(7);
  Discriminator<float> d(DiscriminatorSpec(), rng);
  EXPECT_THROW(d.Forward(Tensor<float>({1, 1, 40, 7})), DimensionError);
  EXPECT_THROW(d.Forward(Tensor<float>({1, 1, 7, 40})), DimensionError);
  EXPECT_NO_THROW(d.Forward(Tensor<float>({1, 1, 8, 8})));
}

TEST(LsganTest, Definitions) {
  const TensorD ones = TensorD::Full({1, 1, 5, 16}, 1.0);
  const TensorD zeros({1, 1, 5, 16});
  const auto a = LsganLosses(ones, zeros);
  EXPECT_EQ(a.disc_loss.item(), 0.0);
  EXPECT_EQ(a.gen_adv_loss.item(), 1.0);
  const TensorD half = TensorD::Full({2, 1, 5, 16}, 0.5);
  const auto b = LsganLosses(half, half);
  EXPECT_DOUBLE_EQ(b.disc_loss.item(), 0.5);
  EXPECT_DOUBLE_EQ(b.gen_adv_loss.item(), 0.25);
}

TEST(LsganTest, GeneratorGradientMatchesFiniteDifferences) {
  Rng rng(8);
  for (int trial = 0; trial < 3; trial++) {
    Generator<double> g(TinyGeneratorSpec(), rng);
    Discriminator<double> d(TinyDiscriminatorSpec(), rng);
    RandomizeOutputLayer(g, rng, 0.3);
    for (auto &[name, t] : d.NamedParameters())
      for (Eigen::Index i = 0; i < t.size(); i++)
        t.mutable_data()[i] = 0.3 * StandardNormal(rng);
    const TensorD x = RandomTensor({2, 1, 8, 12}, rng, 1.0, false);
    const double err = MaxGradientError(
        [&](const std::vector<TensorD> &) {
          return GeneratorAdversarialLoss(d.Forward(g.Forward(x)));
        },
        g.Parameters(), rng, 1e-5, 1e-4);
    EXPECT_LT(err, 1e-3) << "trial " << trial;
  }
}

TEST(CycleLossTest, IdentityGeneratorsGiveZero) {
  Rng rng(9);
  Generator<float> s2t(GeneratorSpec(), rng), t2s(GeneratorSpec(), rng);
  const Tensor<float> xs({2, 1, 40, 32}, Eigen::ArrayXf::Random(2 * 40 * 32));
  const Tensor<float> xt({2, 1, 40, 32}, Eigen::ArrayXf::Random(2 * 40 * 32));
  const auto f = [&](const Generator<float> &g) {
    return [&g](const Tensor<float> &x) { return g.Forward(x); };
  };
  EXPECT_EQ(CycleLoss(xs, xt, f(s2t), f(t2s)).item(), 0.0f);
}

TEST(CycleLossTest, InversePairGivesZero) {
  Rng rng(10);
  const TensorD xs = RandomTensor({2, 1, 8, 8}, rng, 1.0, false);
  const TensorD xt = RandomTensor({2, 1, 8, 8}, rng, 1.0, false);
  const auto plus = [](const TensorD &x) { return AddScalar(x, 0.75); };
  const auto minus = [](const TensorD &x) { return AddScalar(x, -0.75); };
  EXPECT_NEAR(CycleLoss(xs, xt, plus, minus).item(), 0.0, 1e-15);
}

TEST(CycleLossTest, MatchesHandComposedForward) {
  Rng rng(11);
  Generator<double> s2t(TinyGeneratorSpec(), rng), t2s(TinyGeneratorSpec(), rng);
  RandomizeOutputLayer(s2t, rng, 0.3);
  RandomizeOutputLayer(t2s, rng, 0.3);
  const TensorD xs = RandomTensor({3, 1, 8, 10}, rng, 1.0, false);
  const TensorD xt = RandomTensor({3, 1, 8, 10}, rng, 1.0, false);
  const double loss =
      CycleLoss(xs, xt, [&](const TensorD &x) { return s2t.Forward(x); },
                [&](const TensorD &x) { return t2s.Forward(x); })
          .item();
  const Eigen::ArrayXd rs = t2s.Forward(s2t.Forward(xs)).data();
  const Eigen::ArrayXd rt = s2t.Forward(t2s.Forward(xt)).data();
  const double expected =
      (rs - xs.data()).abs().mean() + (rt - xt.data()).abs().mean();
  EXPECT_NEAR(loss, expected, 1e-6);
  EXPECT_GT(loss, 0.0);
}

}  // namespace
}  // namespace uen
