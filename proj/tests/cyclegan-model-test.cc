// tests/cyclegan-model-test.cc

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

#include "uen/cyclegan/cyclegan-model.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support/temp-dir.h"
#include "uen/base/errors.h"
#include "uen/cyclegan/losses.h"
#include "uen/dsp/feature-functions.h"

namespace uen {
namespace {

using testing::TempDir;

GeneratorSpec SmallGenerator() {
  GeneratorSpec s;
  s.feature_dim = 8;
  s.encoder_filters = {3, 4, 5};
  s.residual_blocks = 2;
  s.decoder_filters = {4, 3};
  return s;
}

DiscriminatorSpec SmallDiscriminator() {
  DiscriminatorSpec s;
  s.filters = {3, 4, 4, 3, 1};
  return s;
}

template <typename Real>
Tensor<Real> RandomBatch(Rng &rng, int64_t n, int64_t f, int64_t t) {
  Tensor<Real> x({n, 1, f, t});
  for (Eigen::Index i = 0; i < x.size(); i++)
    x.mutable_data()[i] = static_cast<Real>(StandardNormal(rng));
  return x;
}

// Everything a checkpoint holds, serialized.
template <typename Real>
std::string Serialize(const CycleGanModel<Real> &model) {
  TensorArchive archive;
  model.Save(&archive);
  std::ostringstream os;
  archive.Write(os);
  return os.str();
}

template <typename Real>
std::string SerializeNetwork(const NamedTensors<Real> &params) {
  std::string out;
  for (const auto &[name, t] : params)
    out.append(reinterpret_cast<const char *>(t.data().data()),
               sizeof(Real) * t.size());
  return out;
}

TEST(CycleGanModelTest, SameSeedSameModel) {
  CycleGanModel<float> a(SmallGenerator(), SmallDiscriminator(), 5);
  CycleGanModel<float> b(SmallGenerator(), SmallDiscriminator(), 5);
  CycleGanModel<float> c(SmallGenerator(), SmallDiscriminator(), 6);
  EXPECT_EQ(Serialize(a), Serialize(b));
  EXPECT_NE(Serialize(a), Serialize(c));
}

TEST(CycleGanModelTest, NetworksAreIndependentlyInitialized) {
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 5);
  EXPECT_NE(SerializeNetwork(m.g_s2t().NamedParameters()),
            SerializeNetwork(m.g_t2s().NamedParameters()));
  EXPECT_NE(SerializeNetwork(m.d_s().NamedParameters()),
            SerializeNetwork(m.d_t().NamedParameters()));
}

TEST(TrainStepTest, ZeroLearningRateLeavesParametersUnchanged) {
  CycleGanModel<double> m(SmallGenerator(), SmallDiscriminator(), 1);
  Rng rng(1);
  const std::string before = SerializeNetwork(m.NamedParameters());
  TrainStep(&m, RandomBatch<double>(rng, 2, 8, 16),
            RandomBatch<double>(rng, 2, 8, 16), 0.0, 0.0, 1.0, 2.5);
  EXPECT_EQ(SerializeNetwork(m.NamedParameters()), before);
}

TEST(TrainStepTest, ReportedLossesMatchIndependentForward) {
  CycleGanModel<double> m(SmallGenerator(), SmallDiscriminator(), 2);
  Rng rng(2);
  // Move the generators away from the identity so every term is nonzero.
  for (Generator<double> *g : {&m.g_s2t(), &m.g_t2s()})
    for (auto &[name, t] : g->NamedParameters())
      if (name.rfind("out.", 0) == 0)
        for (Eigen::Index i = 0; i < t.size(); i++)
          t.mutable_data()[i] = 0.2 * StandardNormal(rng);
  const Tensor<double> xs = RandomBatch<double>(rng, 3, 8, 16);
  const Tensor<double> xt = RandomBatch<double>(rng, 3, 8, 16);
  const double w_adv = 1.0, w_cycle = 2.5;
  const StepReport r = TrainStep(&m, xs, xt, 0.0, 0.0, w_adv, w_cycle);

  NoGradGuard no_grad;
  const auto mean_sq = [](const Tensor<double> &d, double target) {
    return (d.data() - target).square().mean();
  };
  const Tensor<double> fake_t = m.g_s2t().Forward(xs);
  const Tensor<double> fake_s = m.g_t2s().Forward(xt);
  const double disc_s = mean_sq(m.d_s().Forward(xs), 1.0) +
                        mean_sq(m.d_s().Forward(fake_s), 0.0);
  const double disc_t = mean_sq(m.d_t().Forward(xt), 1.0) +
                        mean_sq(m.d_t().Forward(fake_t), 0.0);
  const double adv_s = mean_sq(m.d_s().Forward(fake_s), 1.0);
  const double adv_t = mean_sq(m.d_t().Forward(fake_t), 1.0);
  const double cycle =
      (m.g_t2s().Forward(fake_t).data() - xs.data()).abs().mean() +
      (m.g_s2t().Forward(fake_s).data() - xt.data()).abs().mean();

  EXPECT_NEAR(r.loss_disc_s, disc_s, 1e-9);
  EXPECT_NEAR(r.loss_disc_t, disc_t, 1e-9);
  EXPECT_NEAR(r.loss_adv_s, adv_s, 1e-9);
  EXPECT_NEAR(r.loss_adv_t, adv_t, 1e-9);
  EXPECT_NEAR(r.loss_adv, adv_s + adv_t, 1e-9);
  EXPECT_NEAR(r.loss_cycle, cycle, 1e-9);
  EXPECT_GT(cycle, 0.0);
  EXPECT_NEAR(r.loss_total, w_adv * (adv_s + adv_t) + w_cycle * cycle, 1e-6);
}

TEST(TrainStepTest, TotalDecomposesDuringTraining) {
  CycleGanModel<double> m(SmallGenerator(), SmallDiscriminator(), 3);
  Rng rng(3);
  for (int step = 0; step < 5; step++) {
    const StepReport r =
        TrainStep(&m, RandomBatch<double>(rng, 2, 8, 16),
                  RandomBatch<double>(rng, 2, 8, 16), 1e-3, 1e-3, 1.0, 2.5);
    EXPECT_NEAR(r.loss_total, 1.0 * r.loss_adv + 2.5 * r.loss_cycle, 1e-6);
    EXPECT_EQ(r.lr_gen, 1e-3);
  }
}

TEST(TrainStepTest, GeneratorStepDoesNotTouchDiscriminators) {
  CycleGanModel<double> m(SmallGenerator(), SmallDiscriminator(), 4);
  Rng rng(4);
  const std::string d_s = SerializeNetwork(m.d_s().NamedParameters());
  const std::string d_t = SerializeNetwork(m.d_t().NamedParameters());
  const std::string g_s2t = SerializeNetwork(m.g_s2t().NamedParameters());
  const std::string g_t2s = SerializeNetwork(m.g_t2s().NamedParameters());
  TrainStep(&m, RandomBatch<double>(rng, 2, 8, 16),
            RandomBatch<double>(rng, 2, 8, 16), 1e-3, 0.0, 1.0, 2.5);
  EXPECT_EQ(SerializeNetwork(m.d_s().NamedParameters()), d_s);
  EXPECT_EQ(SerializeNetwork(m.d_t().NamedParameters()), d_t);
  EXPECT_NE(SerializeNetwork(m.g_s2t().NamedParameters()), g_s2t);
  EXPECT_NE(SerializeNetwork(m.g_t2s().NamedParameters()), g_t2s);
}

TEST(TrainStepTest, DiscriminatorStepDoesNotTouchGenerators) {
  CycleGanModel<double> m(SmallGenerator(), SmallDiscriminator(), 5);
  Rng rng(5);
  const std::string d_s = SerializeNetwork(m.d_s().NamedParameters());
  const std::string d_t = SerializeNetwork(m.d_t().NamedParameters());
  const std::string g_s2t = SerializeNetwork(m.g_s2t().NamedParameters());
  const std::string g_t2s = SerializeNetwork(m.g_t2s().NamedParameters());
  TrainStep(&m, RandomBatch<double>(rng, 2, 8, 16),
            RandomBatch<double>(rng, 2, 8, 16), 0.0, 1e-3, 1.0, 2.5);
  EXPECT_NE(SerializeNetwork(m.d_s().NamedParameters()), d_s);
  EXPECT_NE(SerializeNetwork(m.d_t().NamedParameters()), d_t);
  EXPECT_EQ(SerializeNetwork(m.g_s2t().NamedParameters()), g_s2t);
  EXPECT_EQ(SerializeNetwork(m.g_t2s().NamedParameters()), g_t2s);
}

TEST(TrainStepTest, NonFiniteLossThrowsWithoutUpdating) {
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 6);
  Rng rng(6);
  Tensor<float> bad = RandomBatch<float>(rng, 2, 8, 16);
  bad.mutable_data()[7] = std::numeric_limits<float>::quiet_NaN();
  const std::string before = Serialize(m);
  EXPECT_THROW(TrainStep(&m, bad, RandomBatch<float>(rng, 2, 8, 16), 1e-3,
                         1e-3, 1.0, 2.5),
               TrainingDivergedError);
  EXPECT_EQ(Serialize(m), before);
}

TEST(TrainStepTest, RejectsMismatchedBatches) {
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 7);
  Rng rng(7);
  EXPECT_THROW(TrainStep(&m, RandomBatch<float>(rng, 2, 8, 16),
                         RandomBatch<float>(rng, 2, 8, 24), 1e-3, 1e-3, 1.0,
                         2.5),
               DimensionError);
}

FeatureMatrix RandomLogMel(Rng &rng, int64_t dims, int64_t frames) {
  FeatureMatrix f;
  f.kind = FeatureKind::kLogMelFbank;
  f.values.resize(dims, frames);
  for (Eigen::Index i = 0; i < f.values.size(); i++)
    f.values.data()[i] = static_cast<float>(StandardNormal(rng));
  return f;
}

TEST(EnhanceTest, FreshModelIsIdentityBeforeDct) {
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 8);
  Rng rng(8);
  for (int64_t t : {4, 9, 300}) {
    const FeatureMatrix in = RandomLogMel(rng, 8, t);
    const FeatureMatrix mel = EnhanceLogMel(m, in);
    EXPECT_EQ(mel.kind, FeatureKind::kLogMelFbank);
    EXPECT_TRUE(mel.values == in.values);
    const FeatureMatrix mfcc = Enhance(m, in);
    EXPECT_EQ(mfcc.kind, FeatureKind::kMfcc);
    EXPECT_TRUE(mfcc.values == DctToMfcc(in, 8).values);
  }
}

TEST(EnhanceTest, RejectsBadInput) {
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 9);
  Rng rng(9);
  EXPECT_THROW(Enhance(m, RandomLogMel(rng, 8, 3)), InputError);
  FeatureMatrix mfcc = RandomLogMel(rng, 8, 20);
  mfcc.kind = FeatureKind::kMfcc;
  EXPECT_THROW(Enhance(m, mfcc), InputError);
  EXPECT_THROW(Enhance(m, RandomLogMel(rng, 9, 20)), DimensionError);
}

std::string ReadBytes(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

TEST(CheckpointTest, RoundTripIsByteIdentical) {
  TempDir dir;
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 10);
  Rng rng(10);
  for (int i = 0; i < 3; i++)
    TrainStep(&m, RandomBatch<float>(rng, 2, 8, 16),
              RandomBatch<float>(rng, 2, 8, 16), 1e-3, 1e-3, 1.0, 2.5);
  SaveCheckpoint(m, 4, 123, dir.File("a.ckpt"));
  LoadedCheckpoint loaded = LoadCheckpoint(dir.File("a.ckpt"));
  EXPECT_EQ(loaded.epoch, 4);
  EXPECT_EQ(loaded.step, 123);
  SaveCheckpoint(loaded.model, 4, 123, dir.File("b.ckpt"));
  EXPECT_EQ(ReadBytes(dir.File("a.ckpt")), ReadBytes(dir.File("b.ckpt")));

  const FeatureMatrix in = RandomLogMel(rng, 8, 50);
  EXPECT_TRUE(Enhance(m, in).values == Enhance(loaded.model, in).values);
}

TEST(CheckpointTest, ResumedTrainingMatchesUninterrupted) {
  TempDir dir;
  CycleGanModel<float> a(SmallGenerator(), SmallDiscriminator(), 11);
  Rng rng(11);
  std::vector<Tensor<float>> batches;
  for (int i = 0; i < 8; i++) batches.push_back(RandomBatch<float>(rng, 2, 8, 16));
  for (int i = 0; i < 2; i++)
    TrainStep(&a, batches[2 * i], batches[2 * i + 1], 1e-3, 1e-3, 1.0, 2.5);
  SaveCheckpoint(a, 0, 2, dir.File("mid.ckpt"));
  CycleGanModel<float> b = std::move(LoadCheckpoint(dir.File("mid.ckpt")).model);
  for (int i = 2; i < 4; i++) {
    const StepReport ra =
        TrainStep(&a, batches[2 * i], batches[2 * i + 1], 1e-3, 1e-3, 1.0, 2.5);
    const StepReport rb =
        TrainStep(&b, batches[2 * i], batches[2 * i + 1], 1e-3, 1e-3, 1.0, 2.5);
    EXPECT_EQ(ra.loss_total, rb.loss_total);
  }
  EXPECT_EQ(Serialize(a), Serialize(b));
}

TEST(CheckpointTest, CorruptFilesAreRejected) {
  TempDir dir;
  CycleGanModel<float> m(SmallGenerator(), SmallDiscriminator(), 12);
  SaveCheckpoint(m, 0, 0, dir.File("ok.ckpt"));
  const std::string bytes = ReadBytes(dir.File("ok.ckpt"));
  {
    std::ofstream os(dir.File("short.ckpt"), std::ios::binary);
    os.write(bytes.data(), bytes.size() / 2);
  }
  EXPECT_THROW(LoadCheckpoint(dir.File("short.ckpt")), CheckpointError);
  {
    std::string bad = bytes;
    bad[0] = 'X';
    std::ofstream os(dir.File("magic.ckpt"), std::ios::binary);
    os << bad;
  }
  EXPECT_THROW(LoadCheckpoint(dir.File("magic.ckpt")), CheckpointError);
  EXPECT_THROW(LoadCheckpoint(dir.File("missing.ckpt")), CheckpointError);

  // Well-formed archives that do not describe a model.
  TensorArchive wrong_shape;
  m.Save(&wrong_shape);
  wrong_shape.Put<float>("g_t2s/out.bias", {2}, Eigen::ArrayXf::Zero(2));
  EXPECT_THROW(CycleGanModel<float>::Load(wrong_shape), CheckpointError);
  EXPECT_THROW(CycleGanModel<float>::Load(TensorArchive()), CheckpointError);
}

}  // namespace
}  // namespace uen
