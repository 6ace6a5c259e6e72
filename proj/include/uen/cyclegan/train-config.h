// uen/cyclegan/train-config.h

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

#ifndef UEN_CYCLEGAN_TRAIN_CONFIG_H_
#define UEN_CYCLEGAN_TRAIN_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace uen {

struct TrainConfig {
  int batch_size = 32;
  int seq_len = 127;
  int n_mels = 40;
  int epochs = 50;
  double lr_gen = 3e-4;
  double lr_disc = 1e-4;
  double lr_min = 1e-6;
  int lr_const_epochs = 15;
  double w_cycle = 2.5;
  double w_adv = 1.0;
  double beta1 = 0.5;
  uint64_t seed = 0;

  // Throws ConfigError unless every field is positive and
  // lr_const_epochs < epochs.
  void Validate() const;

  // Overrides a single field from its text value.  Unknown keys and
  // malformed values throw ConfigError.
  void Set(const std::string &key, const std::string &value);

  // key -> value for every field, in a fixed order on output.
  std::map<std::string, std::string> ToMap() const;
};

// Reads "key = value" lines ('#' starts a comment, blank lines ignored) on
// top of the defaults.  Does not call Validate().
TrainConfig ReadTrainConfig(const std::string &path);
void WriteTrainConfig(const TrainConfig &config, const std::string &path);

// Learning rates for a 0-based epoch: base rates for the first
// lr_const_epochs epochs, then a linear ramp that reaches lr_min on the last
// epoch.
std::pair<double, double> LrSchedule(int epoch, const TrainConfig &config);

}  // namespace uen

#endif  // UEN_CYCLEGAN_TRAIN_CONFIG_H_
