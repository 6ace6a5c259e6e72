// src/cyclegan/trainer.cc

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

#include "uen/cyclegan/trainer.h"

#include <cstdio>
#include <filesystem>

#include "json.hpp"

#include "uen/base/errors.h"
#include "uen/base/random.h"

namespace uen {

namespace {

std::string EpochPath(const std::string &dir, int epoch) {
  char name[32];
  std::snprintf(name, sizeof(name), "epoch-%03d.ckpt", epoch);
  return (std::filesystem::path(dir) / name).string();
}

void LogStep(std::ostream &os, int64_t step, int epoch,
             const StepReport &r) {
  nlohmann::ordered_json j;
  j["step"] = step;
  j["epoch"] = epoch;
  j["lr_gen"] = r.lr_gen;
  j["lr_disc"] = r.lr_disc;
  j["loss_disc_s"] = r.loss_disc_s;
  j["loss_disc_t"] = r.loss_disc_t;
  j["loss_adv"] = r.loss_adv;
  j["loss_cycle"] = r.loss_cycle;
  j["loss_total"] = r.loss_total;
  os << j.dump() << "\n";
  os.flush();
}

}  // namespace

TrainSummary Train(CycleGanModel<float> *model,
                   const std::vector<TrainingUtterance> &clean,
                   const std::vector<TrainingUtterance> &degraded,
                   const TrainConfig &config, const TrainOptions &options) {
  config.Validate();
  if (config.n_mels != model->gen_spec().feature_dim)
    UEN_THROW(ConfigError, "n_mels = ", config.n_mels,
              " but the model expects ", model->gen_spec().feature_dim);
  const bool checkpoints = !options.checkpoint_dir.empty();
  if (checkpoints) std::filesystem::create_directories(options.checkpoint_dir);

  TrainSummary summary;
  int64_t step = options.start_step;
  auto done = [&] {
    return options.max_steps >= 0 && step >= options.max_steps;
  };
  for (int epoch = options.start_epoch; epoch < config.epochs && !done();
       epoch++) {
    const auto [lr_gen, lr_disc] = LrSchedule(epoch, config);
    const std::vector<TrainingBatch> batches =
        SampleEpoch(clean, degraded, config.batch_size, config.seq_len,
                    MixSeed(config.seed, static_cast<uint64_t>(epoch)));
    if (batches.empty())
      UEN_THROW(ConfigError, "fewer clean utterances (", clean.size(),
                ") than one batch (", config.batch_size, ")");
    bool finished = true;
    for (const TrainingBatch &batch : batches) {
      if (done()) {
        finished = false;
        break;
      }
      StepReport report;
      try {
        report = TrainStep(model, batch.source, batch.target, lr_gen, lr_disc,
                           config.w_adv, config.w_cycle);
      } catch (const TrainingDivergedError &e) {
        if (!checkpoints) throw;
        const std::string dump =
            (std::filesystem::path(options.checkpoint_dir) / "diverged.ckpt")
                .string();
        SaveCheckpoint(*model, epoch, step, dump);
        UEN_THROW(TrainingDivergedError, e.what(), " at step ", step,
                  "; state dumped to ", dump);
      }
      step++;
      if (options.log) LogStep(*options.log, step, epoch, report);
      summary.history.push_back(report);
    }
    if (finished) {
      summary.epochs_completed++;
      if (checkpoints) SaveCheckpoint(*model, epoch + 1, step,
                                      EpochPath(options.checkpoint_dir, epoch));
    }
  }
  summary.steps = step - options.start_step;
  if (checkpoints)
    SaveCheckpoint(*model, options.start_epoch + summary.epochs_completed,
                   step,
                   (std::filesystem::path(options.checkpoint_dir) /
                    "final.ckpt").string());
  return summary;
}

}  // namespace uen
