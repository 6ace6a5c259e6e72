// uen/cyclegan/cyclegan-model.h

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

#ifndef UEN_CYCLEGAN_CYCLEGAN_MODEL_H_
#define UEN_CYCLEGAN_CYCLEGAN_MODEL_H_

#include <memory>
#include <string>

#include "uen/autodiff/adam.h"
#include "uen/autodiff/tensor-archive.h"
#include "uen/cyclegan/networks.h"
#include "uen/cyclegan/train-config.h"
#include "uen/dsp/feature-types.h"

namespace uen {

/**
   Two generators (s2t: clean -> degraded, t2s: degraded -> clean), two
   discriminators (d_s judges clean-domain features, d_t degraded ones) and
   one Adam state per network.  Move-only since the parameters are shared
   handles.
*/
template <typename Real>
class CycleGanModel {
 public:
  CycleGanModel(const GeneratorSpec &gen_spec,
                const DiscriminatorSpec &disc_spec, uint64_t seed,
                double beta1 = 0.5);
  CycleGanModel(CycleGanModel &&) = default;
  CycleGanModel &operator=(CycleGanModel &&) = default;
  CycleGanModel(const CycleGanModel &) = delete;
  CycleGanModel &operator=(const CycleGanModel &) = delete;

  Generator<Real> &g_s2t() { return *g_s2t_; }
  Generator<Real> &g_t2s() { return *g_t2s_; }
  Discriminator<Real> &d_s() { return *d_s_; }
  Discriminator<Real> &d_t() { return *d_t_; }
  const Generator<Real> &g_s2t() const { return *g_s2t_; }
  const Generator<Real> &g_t2s() const { return *g_t2s_; }
  const Discriminator<Real> &d_s() const { return *d_s_; }
  const Discriminator<Real> &d_t() const { return *d_t_; }

  Adam<Real> &adam_g_s2t() { return *adam_[0]; }
  Adam<Real> &adam_g_t2s() { return *adam_[1]; }
  Adam<Real> &adam_d_s() { return *adam_[2]; }
  Adam<Real> &adam_d_t() { return *adam_[3]; }

  const GeneratorSpec &gen_spec() const { return g_s2t_->spec(); }
  const DiscriminatorSpec &disc_spec() const { return d_s_->spec(); }

  // Every parameter under "<network>/<layer>.<field>".
  NamedTensors<Real> NamedParameters() const;

  // Parameters plus optimizer state ("adam/<network>/...") and the spec
  // ("spec/...").  Callers may add their own entries under "meta/".
  void Save(TensorArchive *archive) const;
  // Builds a complete model from an archive or throws CheckpointError.
  static CycleGanModel Load(const TensorArchive &archive);

 private:
  std::unique_ptr<Generator<Real>> g_s2t_, g_t2s_;
  std::unique_ptr<Discriminator<Real>> d_s_, d_t_;
  std::unique_ptr<Adam<Real>> adam_[4];
};

struct StepReport {
  double loss_disc_s = 0;
  double loss_disc_t = 0;
  double loss_adv_s = 0;  // d_s on t2s(x_t)
  double loss_adv_t = 0;  // d_t on s2t(x_s)
  double loss_adv = 0;    // loss_adv_s + loss_adv_t
  double loss_cycle = 0;
  double loss_total = 0;  // w_adv * loss_adv + w_cycle * loss_cycle
  double lr_gen = 0;
  double lr_disc = 0;
};

/**
   One training iteration on independently drawn batches [N,1,F,T]:
   first both discriminators take an Adam step on the least-squares loss
   with detached fakes, then both generators take a step on
   w_adv * (adv_s + adv_t) + w_cycle * cycle.  The generator objective is
   evaluated with the freshly updated discriminators.

   Throws TrainingDivergedError before touching any parameter of the stage
   whose loss turned non-finite.
*/
template <typename Real>
StepReport TrainStep(CycleGanModel<Real> *model, const Tensor<Real> &batch_s,
                     const Tensor<Real> &batch_t, double lr_gen,
                     double lr_disc, double w_adv, double w_cycle);

// Maps degraded log mel-filterbank features to the clean domain with g_t2s
// in a single pass and converts the result to MFCCs.  Throws InputError for
// fewer than 4 frames or a non log-mel input.
FeatureMatrix Enhance(const CycleGanModel<float> &model,
                      const FeatureMatrix &degraded);

// The enhanced log mel-filterbank features, before the DCT.
FeatureMatrix EnhanceLogMel(const CycleGanModel<float> &model,
                            const FeatureMatrix &degraded);

void SaveCheckpoint(const CycleGanModel<float> &model, int64_t epoch,
                    int64_t step, const std::string &path);

struct LoadedCheckpoint {
  CycleGanModel<float> model;
  int64_t epoch;
  int64_t step;
};
LoadedCheckpoint LoadCheckpoint(const std::string &path);

extern template class CycleGanModel<float>;
extern template class CycleGanModel<double>;

}  // namespace uen

#endif  // UEN_CYCLEGAN_CYCLEGAN_MODEL_H_
