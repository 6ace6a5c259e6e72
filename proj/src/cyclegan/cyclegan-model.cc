// src/cyclegan/cyclegan-model.cc

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

#include <cmath>

#include "uen/base/errors.h"
#include "uen/cyclegan/losses.h"
#include "uen/dsp/feature-functions.h"

namespace uen {

namespace {

const char *const kNetworkNames[4] = {"g_s2t", "g_t2s", "d_s", "d_t"};

void PutSpec(const GeneratorSpec &g, const DiscriminatorSpec &d,
             double beta1, TensorArchive *archive) {
  archive->PutInt("spec/gen/feature_dim", g.feature_dim);
  for (int i = 0; i < 3; i++) {
    archive->PutInt("spec/gen/encoder_filters/" + std::to_string(i),
                    g.encoder_filters[i]);
    archive->PutInt("spec/gen/encoder_strides/" + std::to_string(i),
                    g.encoder_strides[i]);
  }
  archive->PutInt("spec/gen/residual_blocks", g.residual_blocks);
  for (int i = 0; i < 2; i++)
    archive->PutInt("spec/gen/decoder_filters/" + std::to_string(i),
                    g.decoder_filters[i]);
  archive->PutInt("spec/gen/kernel", g.kernel);
  for (int i = 0; i < 5; i++) {
    archive->PutInt("spec/disc/filters/" + std::to_string(i), d.filters[i]);
    archive->PutInt("spec/disc/strides/" + std::to_string(i), d.strides[i]);
  }
  archive->PutInt("spec/disc/kernel", d.kernel);
  archive->PutInt("spec/disc/min_extent", d.min_extent);
  archive->Put<double>("spec/disc/leaky_slope", {},
                       Eigen::ArrayXd::Constant(1, d.leaky_slope));
  archive->Put<double>("spec/adam_beta1", {},
                       Eigen::ArrayXd::Constant(1, beta1));
}

int GetSmallInt(const TensorArchive &archive, const std::string &name) {
  const int64_t v = archive.GetInt(name);
  if (v <= 0 || v > (1 << 20))
    UEN_THROW(CheckpointError, "implausible value ", v, " for ", name);
  return static_cast<int>(v);
}

void GetSpec(const TensorArchive &archive, GeneratorSpec *g,
             DiscriminatorSpec *d, double *beta1) {
  g->feature_dim = GetSmallInt(archive, "spec/gen/feature_dim");
  for (int i = 0; i < 3; i++) {
    g->encoder_filters[i] = GetSmallInt(
        archive, "spec/gen/encoder_filters/" + std::to_string(i));
    g->encoder_strides[i] = GetSmallInt(
        archive, "spec/gen/encoder_strides/" + std::to_string(i));
  }
  g->residual_blocks = static_cast<int>(
      archive.GetInt("spec/gen/residual_blocks"));
  if (g->residual_blocks < 0)
    UEN_THROW(CheckpointError, "negative residual block count");
  for (int i = 0; i < 2; i++)
    g->decoder_filters[i] = GetSmallInt(
        archive, "spec/gen/decoder_filters/" + std::to_string(i));
  g->kernel = GetSmallInt(archive, "spec/gen/kernel");
  for (int i = 0; i < 5; i++) {
    d->filters[i] =
        GetSmallInt(archive, "spec/disc/filters/" + std::to_string(i));
    d->strides[i] =
        GetSmallInt(archive, "spec/disc/strides/" + std::to_string(i));
  }
  d->kernel = GetSmallInt(archive, "spec/disc/kernel");
  d->min_extent = GetSmallInt(archive, "spec/disc/min_extent");
  d->leaky_slope = archive.GetArray<double>("spec/disc/leaky_slope", {})[0];
  *beta1 = archive.GetArray<double>("spec/adam_beta1", {})[0];
}

template <typename Real>
void CheckFinite(const Tensor<Real> &loss, const char *what) {
  if (!std::isfinite(static_cast<double>(loss.item())))
    UEN_THROW(TrainingDivergedError, what, " became non-finite (",
              static_cast<double>(loss.item()), ")");
}

std::vector<float> ToRowMajor(const Eigen::MatrixXf &m) {
  std::vector<float> out(m.size());
  Eigen::Map<Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>(out.data(), m.rows(), m.cols()) =
      m;
  return out;
}

}  // namespace

template <typename Real>
CycleGanModel<Real>::CycleGanModel(const GeneratorSpec &gen_spec,
                                   const DiscriminatorSpec &disc_spec,
                                   uint64_t seed, double beta1) {
  // Separate streams so that, e.g., shrinking a discriminator leaves the
  // generator initialization unchanged.
  Rng rng_gs(MixSeed(seed, "g_s2t")), rng_gt(MixSeed(seed, "g_t2s"));
  Rng rng_ds(MixSeed(seed, "d_s")), rng_dt(MixSeed(seed, "d_t"));
  g_s2t_ = std::make_unique<Generator<Real>>(gen_spec, rng_gs);
  g_t2s_ = std::make_unique<Generator<Real>>(gen_spec, rng_gt);
  d_s_ = std::make_unique<Discriminator<Real>>(disc_spec, rng_ds);
  d_t_ = std::make_unique<Discriminator<Real>>(disc_spec, rng_dt);
  AdamOptions options;
  options.beta1 = beta1;
  adam_[0] = std::make_unique<Adam<Real>>(g_s2t_->Parameters(), options);
  adam_[1] = std::make_unique<Adam<Real>>(g_t2s_->Parameters(), options);
  adam_[2] = std::make_unique<Adam<Real>>(d_s_->Parameters(), options);
  adam_[3] = std::make_unique<Adam<Real>>(d_t_->Parameters(), options);
}

template <typename Real>
NamedTensors<Real> CycleGanModel<Real>::NamedParameters() const {
  NamedTensors<Real> out;
  const NamedTensors<Real> parts[4] = {
      g_s2t_->NamedParameters(), g_t2s_->NamedParameters(),
      d_s_->NamedParameters(), d_t_->NamedParameters()};
  for (int n = 0; n < 4; n++)
    for (const auto &[name, t] : parts[n])
      out.emplace_back(std::string(kNetworkNames[n]) + "/" + name, t);
  return out;
}

template <typename Real>
void CycleGanModel<Real>::Save(TensorArchive *archive) const {
  PutSpec(gen_spec(), disc_spec(), adam_[0]->state().options.beta1, archive);
  for (const auto &[name, t] : NamedParameters()) archive->Put(name, t);
  for (int n = 0; n < 4; n++)
    adam_[n]->Save(std::string("adam/") + kNetworkNames[n], archive);
}

template <typename Real>
CycleGanModel<Real> CycleGanModel<Real>::Load(const TensorArchive &archive) {
  GeneratorSpec g;
  DiscriminatorSpec d;
  double beta1;
  GetSpec(archive, &g, &d, &beta1);
  CycleGanModel model(g, d, 0, beta1);
  for (auto &[name, t] : model.NamedParameters())
    t.mutable_data() = archive.GetArray<Real>(name, t.shape());
  for (int n = 0; n < 4; n++)
    model.adam_[n]->Load(std::string("adam/") + kNetworkNames[n], archive);
  return model;
}

template <typename Real>
StepReport TrainStep(CycleGanModel<Real> *model, const Tensor<Real> &batch_s,
                     const Tensor<Real> &batch_t, double lr_gen,
                     double lr_disc, double w_adv, double w_cycle) {
  if (batch_s.shape() != batch_t.shape())
    UEN_THROW(DimensionError, "source batch ", ShapeToString(batch_s.shape()),
              " and target batch ", ShapeToString(batch_t.shape()),
              " differ in shape");
  auto &g_s2t = model->g_s2t();
  auto &g_t2s = model->g_t2s();
  auto &d_s = model->d_s();
  auto &d_t = model->d_t();
  StepReport report;
  report.lr_gen = lr_gen;
  report.lr_disc = lr_disc;

  const Tensor<Real> fake_t = g_s2t.Forward(batch_s);
  const Tensor<Real> fake_s = g_t2s.Forward(batch_t);

  // Discriminators.
  {
    const Tensor<Real> loss_s =
        DiscriminatorLoss(d_s.Forward(batch_s), d_s.Forward(fake_s.Detach()));
    const Tensor<Real> loss_t =
        DiscriminatorLoss(d_t.Forward(batch_t), d_t.Forward(fake_t.Detach()));
    CheckFinite(loss_s, "discriminator loss (clean domain)");
    CheckFinite(loss_t, "discriminator loss (degraded domain)");
    report.loss_disc_s = loss_s.item();
    report.loss_disc_t = loss_t.item();
    Add(loss_s, loss_t).Backward();
    model->adam_d_s().Step(lr_disc);
    model->adam_d_t().Step(lr_disc);
  }

  // Generators.
  {
    const Tensor<Real> adv_s = GeneratorAdversarialLoss(d_s.Forward(fake_s));
    const Tensor<Real> adv_t = GeneratorAdversarialLoss(d_t.Forward(fake_t));
    const Tensor<Real> cycle = Add(L1Loss(g_t2s.Forward(fake_t), batch_s),
                                   L1Loss(g_s2t.Forward(fake_s), batch_t));
    const Tensor<Real> total =
        Add(MulScalar(Add(adv_s, adv_t), static_cast<Real>(w_adv)),
            MulScalar(cycle, static_cast<Real>(w_cycle)));
    CheckFinite(total, "generator loss");
    report.loss_adv_s = adv_s.item();
    report.loss_adv_t = adv_t.item();
    report.loss_adv = report.loss_adv_s + report.loss_adv_t;
    report.loss_cycle = cycle.item();
    report.loss_total = total.item();
    total.Backward();
    model->adam_d_s().ClearGrads();
    model->adam_d_t().ClearGrads();
    model->adam_g_s2t().Step(lr_gen);
    model->adam_g_t2s().Step(lr_gen);
  }
  return report;
}

FeatureMatrix EnhanceLogMel(const CycleGanModel<float> &model,
                            const FeatureMatrix &degraded) {
  if (degraded.kind != FeatureKind::kLogMelFbank)
    UEN_THROW(InputError, "enhancement expects log mel-filterbank features");
  const int64_t f = degraded.num_dims(), t = degraded.num_frames();
  if (t < model.gen_spec().Downsampling())
    UEN_THROW(InputError, "enhancement needs at least ",
              model.gen_spec().Downsampling(), " frames, got ", t);
  if (f != model.gen_spec().feature_dim)
    UEN_THROW(DimensionError, "features have ", f, " dims, model expects ",
              model.gen_spec().feature_dim);
  NoGradGuard no_grad;
  const std::vector<float> rows = ToRowMajor(degraded.values);
  Tensor<float> input({1, 1, f, t},
                      Eigen::Map<const Eigen::ArrayXf>(rows.data(), rows.size()));
  const Tensor<float> output = model.g_t2s().Forward(input);
  FeatureMatrix out = degraded;
  out.values = Eigen::Map<const Eigen::Matrix<float, Eigen::Dynamic,
                                              Eigen::Dynamic, Eigen::RowMajor>>(
      output.data().data(), f, t);
  return out;
}

FeatureMatrix Enhance(const CycleGanModel<float> &model,
                      const FeatureMatrix &degraded) {
  const FeatureMatrix mel = EnhanceLogMel(model, degraded);
  return DctToMfcc(mel, static_cast<int>(mel.num_dims()));
}

void SaveCheckpoint(const CycleGanModel<float> &model, int64_t epoch,
                    int64_t step, const std::string &path) {
  TensorArchive archive;
  model.Save(&archive);
  archive.PutInt("meta/epoch", epoch);
  archive.PutInt("meta/step", step);
  archive.WriteFile(path);
}

LoadedCheckpoint LoadCheckpoint(const std::string &path) {
  const TensorArchive archive = TensorArchive::ReadFile(path);
  CycleGanModel<float> model = CycleGanModel<float>::Load(archive);
  return {std::move(model), archive.GetInt("meta/epoch"),
          archive.GetInt("meta/step")};
}

template class CycleGanModel<float>;
template class CycleGanModel<double>;
template StepReport TrainStep(CycleGanModel<float> *, const Tensor<float> &,
                              const Tensor<float> &, double, double, double,
                              double);
template StepReport TrainStep(CycleGanModel<double> *, const Tensor<double> &,
                              const Tensor<double> &, double, double, double,
                              double);

}  // namespace uen
