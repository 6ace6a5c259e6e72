// tests/adam-test.cc

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

#include "uen/autodiff/adam.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "uen/autodiff/ops.h"
#include "uen/base/errors.h"
#include "uen/base/random.h"

namespace uen {
namespace {

TEST(AdamTest, FirstStepMovesByLearningRate) {
  for (double g : {-3.0, 0.01, 250.0}) {
    Tensor<double> w({1}, Eigen::ArrayXd::Constant(1, 1.0), true);
    Adam<double> adam({w});
    w.mutable_grad()[0] = g;
    adam.Step(0.1);
    EXPECT_NEAR(w.data()[0], 1.0 - 0.1 * (g > 0 ? 1 : -1), 1e-6);
    EXPECT_FALSE(w.has_grad());
    EXPECT_EQ(adam.state().step_count, 1);
  }
}

TEST(AdamTest, ZeroGradientLeavesParameter) {
  Tensor<float> w({3}, Eigen::ArrayXf::LinSpaced(3, -1, 1), true);
  Adam<float> adam({w});
  w.mutable_grad().setZero();
  adam.Step(0.5);
  EXPECT_TRUE((w.data() == Eigen::ArrayXf::LinSpaced(3, -1, 1)).all());
}

TEST(AdamTest, MissingGradientIsUsageError) {
  Tensor<float> a({1}, Eigen::ArrayXf::Ones(1), true);
  Tensor<float> b({1}, Eigen::ArrayXf::Ones(1), true);
  Adam<float> adam({a, b});
  a.mutable_grad()[0] = 1.0f;
  EXPECT_THROW(adam.Step(0.1), UsageError);
  EXPECT_EQ(a.data()[0], 1.0f);
  EXPECT_EQ(adam.state().step_count, 0);
}

// Hand-rolled scalar recurrence on f(w) = w^2, independent of Adam<>.
TEST(AdamTest, TrajectoryMatchesScalarRecurrence) {
  const double lr = 0.05, b1 = 0.5, b2 = 0.999, eps = 1e-8;
  double w_ref = 1.3, m = 0, v = 0;
  Tensor<double> w({}, Eigen::ArrayXd::Constant(1, 1.3), true);
  Adam<double> adam({w}, AdamOptions{b1, b2, eps});
  for (int t = 1; t <= 10; t++) {
    const double g = 2 * w_ref;
    m = b1 * m + (1 - b1) * g;
    v = b2 * v + (1 - b2) * g * g;
    const double mhat = m / (1 - std::pow(b1, t));
    const double vhat = v / (1 - std::pow(b2, t));
    w_ref -= lr * mhat / (std::sqrt(vhat) + eps);

    Mul(w, w).Backward();
    adam.Step(lr);
    EXPECT_NEAR(w.data()[0], w_ref, 1e-6) << "step " << t;
  }
}

TEST(AdamTest, StateRoundTripsThroughArchive) {
  Tensor<float> w({2, 2}, Eigen::ArrayXf::Ones(4), true);
  Adam<float> adam({w});
  for (int i = 0; i < 3; i++) {
    Sum(Mul(w, w)).Backward();
    adam.Step(0.01);
  }
  TensorArchive archive;
  adam.Save("opt", &archive);
  std::stringstream ss;
  archive.Write(ss);
  TensorArchive loaded = TensorArchive::Read(ss);

  Tensor<float> w2({2, 2}, w.data(), true);
  Adam<float> adam2({w2});
  adam2.Load("opt", loaded);
  EXPECT_EQ(adam2.state().step_count, 3);
  EXPECT_TRUE((adam2.state().first_moment[0] ==
               adam.state().first_moment[0]).all());
  EXPECT_TRUE((adam2.state().second_moment[0] ==
               adam.state().second_moment[0]).all());
}

// Forward + backward + step twice from the same seed: identical bits.
TEST(AdamTest, TrainingStepIsBitReproducible) {
  auto run = [] {
    Rng rng(99);
    auto randn = [&](Shape s) {
      Eigen::ArrayXf v(NumElements(s));
      for (Eigen::Index i = 0; i < v.size(); i++)
        v[i] = static_cast<float>(StandardNormal(rng));
      return v;
    };
    Tensor<float> x({2, 1, 8, 8}, randn({2, 1, 8, 8}));
    Tensor<float> w({4, 1, 3, 3}, randn({4, 1, 3, 3}), true);
    Tensor<float> g = Tensor<float>::Full({4}, 1.0f, true);
    Tensor<float> b = Tensor<float>::Full({4}, 0.0f, true);
    Tensor<float> w2({4, 1, 3, 3}, randn({4, 1, 3, 3}), true);
    Adam<float> adam({w, g, b, w2});
    for (int step = 0; step < 3; step++) {
      Tensor<float> h = Conv2d(x, w, Tensor<float>(), 2, Padding::kSame);
      h = LeakyRelu(InstanceNorm(h, g, b), 0.2f);
      h = ConvTranspose2d(h, w2, Tensor<float>(), 2, Padding::kSame);
      L1Loss(h, x).Backward();
      adam.Step(1e-2);
    }
    return Eigen::ArrayXf(w2.data());
  };
  const Eigen::ArrayXf a = run(), b = run();
  EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(float)), 0);
}

TEST(TensorArchiveTest, TruncationIsDetected) {
  TensorArchive archive;
  archive.Put<float>("a", Shape{3}, Eigen::ArrayXf::Ones(3));
  archive.PutInt("n", 7);
  std::stringstream ss;
  archive.Write(ss);
  const std::string bytes = ss.str();
  for (size_t cut : {size_t(4), bytes.size() / 2, bytes.size() - 1}) {
    std::stringstream truncated(bytes.substr(0, cut));
    EXPECT_THROW(TensorArchive::Read(truncated), CheckpointError);
  }
  std::stringstream bad("XXXXXXXX" + bytes.substr(8));
  EXPECT_THROW(TensorArchive::Read(bad), CheckpointError);
  std::stringstream ok(bytes);
  TensorArchive back = TensorArchive::Read(ok);
  EXPECT_EQ(back.GetInt("n"), 7);
  EXPECT_THROW(back.GetArray<float>("a", Shape{4}), CheckpointError);
  EXPECT_THROW(back.GetArray<double>("a", Shape{3}), CheckpointError);
}

}  // namespace
}  // namespace uen
