// uen/cyclegan/trainer.h

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

#ifndef UEN_CYCLEGAN_TRAINER_H_
#define UEN_CYCLEGAN_TRAINER_H_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "uen/cyclegan/cyclegan-model.h"
#include "uen/cyclegan/epoch-sampler.h"
#include "uen/cyclegan/train-config.h"

namespace uen {

struct TrainOptions {
  // Checkpoints go to <dir>/epoch-NNN.ckpt and <dir>/final.ckpt; a model
  // whose loss diverged is dumped to <dir>/diverged.ckpt.  Empty disables
  // all checkpoint output.
  std::string checkpoint_dir;
  // One JSON object per step if non-null.
  std::ostream *log = nullptr;
  // Resume point; epochs before it are skipped.
  int start_epoch = 0;
  int64_t start_step = 0;
  // Stop after this many steps in total (including start_step); < 0 means
  // run every epoch.
  int64_t max_steps = -1;
};

struct TrainSummary {
  int64_t steps = 0;
  int epochs_completed = 0;
  std::vector<StepReport> history;
};

// Runs the epoch loop: learning rates from LrSchedule(), batches from
// SampleEpoch() with epoch seed MixSeed(config.seed, epoch).  Throws
// TrainingDivergedError naming the dump path on a non-finite loss.
TrainSummary Train(CycleGanModel<float> *model,
                   const std::vector<TrainingUtterance> &clean,
                   const std::vector<TrainingUtterance> &degraded,
                   const TrainConfig &config, const TrainOptions &options);

}  // namespace uen

#endif  // UEN_CYCLEGAN_TRAINER_H_
