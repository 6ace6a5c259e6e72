// tests/ops-test.cc

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

#include <gtest/gtest.h>

#include "gradient-check.h"
#include "uen/base/errors.h"

namespace uen {
namespace {

using testing::MaxGradientError;
using testing::RandomTensor;
using testing::TensorD;

constexpr double kGradTol = 1e-3;

TEST(Conv2dTest, BoxSumOfOnes) {
  Tensor<float> x = Tensor<float>::Full({1, 1, 4, 4}, 1.0f);
  Tensor<float> w = Tensor<float>::Full({1, 1, 3, 3}, 1.0f);
  Tensor<float> b = Tensor<float>::Full({1}, 0.0f);
  Tensor<float> y = Conv2d(x, w, b, 1, Padding::kSame);
  ASSERT_EQ(y.shape(), (Shape{1, 1, 4, 4}));
  EXPECT_FLOAT_EQ(y.data()[0], 4.0f);       // corner
  EXPECT_FLOAT_EQ(y.data()[3], 4.0f);       // corner
  EXPECT_FLOAT_EQ(y.data()[1], 6.0f);       // edge
  EXPECT_FLOAT_EQ(y.data()[5], 9.0f);       // center
  EXPECT_FLOAT_EQ(y.data()[10], 9.0f);      // center
}

TEST(Conv2dTest, StrideTwoHalvesExtent) {
  Tensor<float> x({1, 1, 4, 4});
  Tensor<float> w({3, 1, 3, 3});
  Tensor<float> y = Conv2d(x, w, Tensor<float>(), 2, Padding::kSame);
  EXPECT_EQ(y.shape(), (Shape{1, 3, 2, 2}));
  Tensor<float> x5({2, 1, 5, 7});
  EXPECT_EQ(Conv2d(x5, w, Tensor<float>(), 2, Padding::kSame).shape(),
            (Shape{2, 3, 3, 4}));
  EXPECT_EQ(Conv2d(x5, w, Tensor<float>(), 1, Padding::kValid).shape(),
            (Shape{2, 3, 3, 5}));
}

TEST(Conv2dTest, ChannelMismatchIsDimensionError) {
  Tensor<float> x({1, 2, 4, 4});
  Tensor<float> w({1, 3, 3, 3});
  EXPECT_THROW(Conv2d(x, w, Tensor<float>(), 1, Padding::kSame),
               DimensionError);
  EXPECT_THROW(Conv2d(x, Tensor<float>({1, 2, 5, 5}), Tensor<float>(), 1,
                      Padding::kValid),
               DimensionError);
  EXPECT_THROW(Conv2d(x, Tensor<float>({1, 2, 3, 3}), Tensor<float>(), 0,
                      Padding::kSame),
               InputError);
}

TEST(Conv2dTest, SamePaddingSplitsSmallerHalfFirst) {
  ConvGeometry g = MakeConvGeometry(127, 40, 4, 4, 2, Padding::kSame);
  EXPECT_EQ(g.out_h, 64);
  EXPECT_EQ(g.pad_top, 1);  // total 3
  EXPECT_EQ(g.out_w, 20);
  EXPECT_EQ(g.pad_left, 1);  // total 2
}

struct ConvCase {
  Shape input;
  int filters;
  int kernel;
  int stride;
  Padding padding;
};

const ConvCase kConvCases[] = {
    {{1, 1, 5, 6}, 2, 3, 1, Padding::kSame},
    {{2, 3, 6, 5}, 2, 3, 2, Padding::kSame},
    {{1, 2, 7, 8}, 3, 4, 2, Padding::kSame},
    {{2, 2, 6, 6}, 1, 4, 1, Padding::kSame},
    {{1, 2, 6, 7}, 2, 3, 2, Padding::kValid},
};

TEST(Conv2dTest, GradientMatchesFiniteDifferences) {
  Rng rng(11);
  for (const ConvCase &c : kConvCases) {
    TensorD x = RandomTensor(c.input, rng);
    TensorD w = RandomTensor({c.filters, c.input[1], c.kernel, c.kernel}, rng);
    TensorD b = RandomTensor({c.filters}, rng);
    auto f = [&](const std::vector<TensorD> &in) {
      return Conv2d(in[0], in[1], in[2], c.stride, c.padding);
    };
    EXPECT_LT(MaxGradientError(f, {x, w, b}, rng), kGradTol)
        << ShapeToString(c.input) << " stride " << c.stride;
  }
}

TEST(ConvTranspose2dTest, StrideTwoDoublesExtent) {
  Tensor<float> x({1, 4, 10, 10});
  Tensor<float> w({4, 2, 3, 3});
  EXPECT_EQ(ConvTranspose2d(x, w, Tensor<float>(), 2, Padding::kSame).shape(),
            (Shape{1, 2, 20, 20}));
  EXPECT_THROW(ConvTranspose2d(x, Tensor<float>({3, 2, 3, 3}), Tensor<float>(),
                               2, Padding::kSame),
               DimensionError);
}

TEST(ConvTranspose2dTest, GradientMatchesFiniteDifferences) {
  Rng rng(12);
  for (const ConvCase &c : kConvCases) {
    TensorD x = RandomTensor(c.input, rng);
    TensorD w = RandomTensor({c.input[1], c.filters, c.kernel, c.kernel}, rng);
    TensorD b = RandomTensor({c.filters}, rng);
    auto f = [&](const std::vector<TensorD> &in) {
      return ConvTranspose2d(in[0], in[1], in[2], c.stride, c.padding);
    };
    EXPECT_LT(MaxGradientError(f, {x, w, b}, rng), kGradTol)
        << ShapeToString(c.input) << " stride " << c.stride;
  }
}

double Dot(const TensorD &a, const TensorD &b) {
  return (a.data() * b.data()).sum();
}

// <conv(x), y> == <x, conv^T(y)> with a shared weight.
TEST(ConvTranspose2dTest, AdjointOfConv2d) {
  Rng rng(13);
  for (const ConvCase &c : kConvCases) {
    TensorD w = RandomTensor({c.filters, c.input[1], c.kernel, c.kernel}, rng,
                             1.0, false);
    const ConvGeometry g = MakeConvGeometry(c.input[2], c.input[3], c.kernel,
                                            c.kernel, c.stride, c.padding);
    // conv_transpose only reaches input extents it can reproduce exactly.
    Shape in = c.input;
    if (c.padding == Padding::kSame) {
      in[2] = g.out_h * c.stride;
      in[3] = g.out_w * c.stride;
    } else {
      in[2] = (g.out_h - 1) * c.stride + c.kernel;
      in[3] = (g.out_w - 1) * c.stride + c.kernel;
    }
    TensorD x = RandomTensor(in, rng, 1.0, false);
    TensorD y =
        RandomTensor({in[0], c.filters, g.out_h, g.out_w}, rng, 1.0, false);
    const double lhs =
        Dot(Conv2d(x, w, TensorD(), c.stride, c.padding), y);
    const double rhs =
        Dot(x, ConvTranspose2d(y, w, TensorD(), c.stride, c.padding));
    EXPECT_NEAR(lhs, rhs, 1e-4 * std::max(1.0, std::abs(lhs)));
  }
}

// The same identity at float precision, which is what training runs on.
TEST(ConvTranspose2dTest, ForwardEqualsConvInputGradient) {
  Rng rng(14);
  TensorD wd = RandomTensor({3, 2, 3, 3}, rng, 0.5, false);
  TensorD yd = RandomTensor({1, 3, 4, 5}, rng, 1.0, false);
  Tensor<float> w(wd.shape(), wd.data().cast<float>());
  Tensor<float> y(yd.shape(), yd.data().cast<float>());
  Tensor<float> x({1, 2, 8, 10}, Eigen::ArrayXf::Zero(160), true);
  Sum(Mul(Conv2d(x, w, Tensor<float>(), 2, Padding::kSame), y)).Backward();
  Tensor<float> t = ConvTranspose2d(y, w, Tensor<float>(), 2, Padding::kSame);
  ASSERT_EQ(t.shape(), x.shape());
  EXPECT_LT((t.data() - x.grad()).abs().maxCoeff(), 1e-4f);
}

TEST(InstanceNormTest, ConstantSliceMapsToZero) {
  Tensor<float> x = Tensor<float>::Full({1, 2, 3, 3}, 4.0f);
  Tensor<float> gamma = Tensor<float>::Full({2}, 1.0f);
  Tensor<float> beta = Tensor<float>::Full({2}, 0.0f);
  EXPECT_TRUE((InstanceNorm(x, gamma, beta).data() == 0.0f).all());
}

TEST(InstanceNormTest, NormalizesEachSlice) {
  Rng rng(21);
  TensorD x = RandomTensor({2, 3, 4, 5}, rng, 3.0, false);
  TensorD y = InstanceNorm(x, TensorD::Full({3}, 1.0), TensorD::Full({3}, 0.0));
  for (int s = 0; s < 6; s++) {
    Eigen::ArrayXd slice = y.data().segment(s * 20, 20);
    EXPECT_NEAR(slice.mean(), 0.0, 1e-12);
    EXPECT_NEAR((slice - slice.mean()).square().mean(), 1.0, 1e-4);
  }
}

TEST(InstanceNormTest, GradientMatchesFiniteDifferences) {
  Rng rng(22);
  for (Shape s : {Shape{1, 1, 3, 4}, Shape{2, 3, 4, 4}, Shape{1, 2, 5, 2}}) {
    TensorD x = RandomTensor(s, rng);
    TensorD gamma = RandomTensor({s[1]}, rng);
    TensorD beta = RandomTensor({s[1]}, rng);
    auto f = [](const std::vector<TensorD> &in) {
      return InstanceNorm(in[0], in[1], in[2]);
    };
    EXPECT_LT(MaxGradientError(f, {x, gamma, beta}, rng), kGradTol);
  }
}

TEST(ActivationTest, LeakyReluDefinition) {
  Tensor<float> x({3}, Eigen::Array3f(-1.0f, 0.0f, 2.0f));
  Tensor<float> y = LeakyRelu(x, 0.2f);
  EXPECT_FLOAT_EQ(y.data()[0], -0.2f);
  EXPECT_FLOAT_EQ(y.data()[1], 0.0f);
  EXPECT_FLOAT_EQ(y.data()[2], 2.0f);
}

TEST(ActivationTest, ReluIsSlopeZeroLeakyRelu) {
  Rng rng(31);
  TensorD x = RandomTensor({2, 2, 3, 3}, rng);
  EXPECT_TRUE((Relu(x).data() == LeakyRelu(x, 0.0).data()).all());
}

TEST(ActivationTest, SubgradientAtZeroIsZero) {
  Tensor<double> x({2}, Eigen::Array2d(0.0, 1.0), true);
  Sum(Relu(x)).Backward();
  EXPECT_EQ(x.grad()[0], 0.0);
  EXPECT_EQ(x.grad()[1], 1.0);
}

// Keeps inputs away from the kink so finite differences are meaningful.
TensorD AwayFromZero(TensorD t) {
  auto &d = t.mutable_data();
  d = (d >= 0).select(d + 0.05, d - 0.05);
  return t;
}

TEST(ActivationTest, GradientMatchesFiniteDifferences) {
  Rng rng(32);
  for (Shape s : {Shape{5}, Shape{2, 3, 4}, Shape{1, 2, 3, 3}}) {
    TensorD x = AwayFromZero(RandomTensor(s, rng));
    auto relu = [](const std::vector<TensorD> &in) { return Relu(in[0]); };
    auto leaky = [](const std::vector<TensorD> &in) {
      return LeakyRelu(in[0], 0.2);
    };
    EXPECT_LT(MaxGradientError(relu, {x}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(leaky, {x}, rng), kGradTol);
  }
}

TEST(LossTest, Definitions) {
  Tensor<float> x({3}, Eigen::Array3f(1, 2, 3));
  EXPECT_EQ(L1Loss(x, x).item(), 0.0f);
  Tensor<float> ones = Tensor<float>::Full({2}, 1.0f);
  Tensor<float> zeros = Tensor<float>::Full({2}, 0.0f);
  EXPECT_FLOAT_EQ(MseLoss(ones, zeros).item(), 1.0f);
  EXPECT_FLOAT_EQ(L1Loss(ones, zeros).item(), 1.0f);
  EXPECT_THROW(L1Loss(x, ones), DimensionError);
  EXPECT_THROW(MseLoss(x, ones), DimensionError);
}

TEST(LossTest, GradientMatchesFiniteDifferences) {
  Rng rng(41);
  for (Shape s : {Shape{4}, Shape{2, 3}, Shape{1, 2, 3, 2}}) {
    TensorD a = RandomTensor(s, rng);
    // Offset b so that no |a - b| sits on the L1 kink.
    TensorD b(s, AwayFromZero(RandomTensor(s, rng)).data() + a.data(), true);
    auto l1 = [](const std::vector<TensorD> &in) {
      return L1Loss(in[0], in[1]);
    };
    auto mse = [](const std::vector<TensorD> &in) {
      return MseLoss(in[0], in[1]);
    };
    EXPECT_LT(MaxGradientError(l1, {a, b}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(mse, {a, b}, rng), kGradTol);
  }
}

TEST(ElementwiseTest, GradientMatchesFiniteDifferences) {
  Rng rng(51);
  for (Shape s : {Shape{3}, Shape{2, 4}, Shape{1, 2, 2, 3}}) {
    TensorD a = RandomTensor(s, rng);
    TensorD b = RandomTensor(s, rng);
    auto add = [](const std::vector<TensorD> &in) { return Add(in[0], in[1]); };
    auto sub = [](const std::vector<TensorD> &in) { return Sub(in[0], in[1]); };
    auto mul = [](const std::vector<TensorD> &in) { return Mul(in[0], in[1]); };
    auto scale = [](const std::vector<TensorD> &in) {
      return AddScalar(MulScalar(in[0], -1.7), 0.3);
    };
    auto mean = [](const std::vector<TensorD> &in) { return Mean(in[0]); };
    EXPECT_LT(MaxGradientError(add, {a, b}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(sub, {a, b}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(mul, {a, b}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(scale, {a}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(mean, {a}, rng), kGradTol);
  }
}

TEST(PadCropTest, RoundTripAndGradients) {
  Rng rng(61);
  for (Shape s : {Shape{1, 1, 3, 3}, Shape{2, 2, 4, 5}, Shape{1, 3, 2, 6}}) {
    TensorD x = RandomTensor(s, rng);
    TensorD padded = Pad2d(x, 1, 2, 0, 3);
    EXPECT_EQ(padded.dim(2), s[2] + 3);
    EXPECT_EQ(padded.dim(3), s[3] + 3);
    TensorD back = Crop2d(padded, 1, 0, s[2], s[3]);
    EXPECT_TRUE((back.data() == x.data()).all());
    auto pad = [](const std::vector<TensorD> &in) {
      return Pad2d(in[0], 2, 0, 1, 1);
    };
    auto crop = [&](const std::vector<TensorD> &in) {
      return Crop2d(in[0], 1, 1, s[2] - 1, s[3] - 1);
    };
    EXPECT_LT(MaxGradientError(pad, {x}, rng), kGradTol);
    EXPECT_LT(MaxGradientError(crop, {x}, rng), kGradTol);
  }
  TensorD x = RandomTensor({1, 1, 3, 3}, rng);
  EXPECT_THROW(Crop2d(x, 1, 0, 3, 3), DimensionError);
}

// conv -> instance norm -> relu -> loss, checked end to end.
TEST(ComposedGraphTest, MatchesFiniteDifferences) {
  Rng rng(71);
  int checked = 0;
  while (checked < 3) {
    TensorD x = RandomTensor({2, 2, 6, 5}, rng);
    TensorD w1 = RandomTensor({3, 2, 3, 3}, rng, 0.5);
    TensorD b1 = RandomTensor({3}, rng);
    TensorD gamma = RandomTensor({3}, rng);
    TensorD beta = RandomTensor({3}, rng);
    TensorD w2 = RandomTensor({3, 1, 3, 3}, rng, 0.5);
    TensorD target = RandomTensor({2, 1, 12, 10}, rng, 1.0, false);
    // Finite differences are meaningless within a step of the ReLU kink.
    TensorD pre =
        InstanceNorm(Conv2d(x, w1, b1, 1, Padding::kSame), gamma, beta);
    if (pre.data().abs().minCoeff() < 1e-2) continue;
    checked++;
    auto f = [&](const std::vector<TensorD> &in) {
      TensorD h = Conv2d(in[0], in[1], in[2], 1, Padding::kSame);
      h = Relu(InstanceNorm(h, in[3], in[4]));
      h = ConvTranspose2d(h, in[5], TensorD(), 2, Padding::kSame);
      return MseLoss(h, target);
    };
    EXPECT_LT(MaxGradientError(f, {x, w1, b1, gamma, beta, w2}, rng),
              kGradTol);
  }
}

}  // namespace
}  // namespace uen
