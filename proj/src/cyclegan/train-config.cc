// src/cyclegan/train-config.cc

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

#include "uen/cyclegan/train-config.h"

#include <charconv>
#include <fstream>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "uen/base/errors.h"
#include "uen/base/text-utils.h"

namespace uen {

namespace {

template <typename T>
T ParseNumber(const std::string &key, const std::string &text) {
  T value{};
  std::istringstream is(text);
  is >> value;
  if (is.fail() || !(is >> std::ws).eof())
    UEN_THROW(ConfigError, "bad value '", text, "' for ", key);
  return value;
}

std::string FormatDouble(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void TrainConfig::Validate() const {
  auto require = [](bool ok, const char *what) {
    if (!ok) UEN_THROW(ConfigError, "invalid training config: ", what);
  };
  require(batch_size > 0, "batch_size must be positive");
  require(seq_len > 0, "seq_len must be positive");
  require(n_mels > 0, "n_mels must be positive");
  require(epochs > 0, "epochs must be positive");
  require(lr_gen > 0 && lr_disc > 0 && lr_min > 0,
          "learning rates must be positive");
  require(lr_const_epochs > 0, "lr_const_epochs must be positive");
  require(lr_const_epochs < epochs, "lr_const_epochs must be below epochs");
  require(w_cycle > 0 && w_adv > 0, "loss weights must be positive");
  require(beta1 > 0 && beta1 < 1, "beta1 must lie in (0, 1)");
}

void TrainConfig::Set(const std::string &key, const std::string &value) {
  if (key == "batch_size") batch_size = ParseNumber<int>(key, value);
  else if (key == "seq_len") seq_len = ParseNumber<int>(key, value);
  else if (key == "n_mels") n_mels = ParseNumber<int>(key, value);
  else if (key == "epochs") epochs = ParseNumber<int>(key, value);
  else if (key == "lr_gen") lr_gen = ParseNumber<double>(key, value);
  else if (key == "lr_disc") lr_disc = ParseNumber<double>(key, value);
  else if (key == "lr_min") lr_min = ParseNumber<double>(key, value);
  else if (key == "lr_const_epochs")
    lr_const_epochs = ParseNumber<int>(key, value);
  else if (key == "w_cycle") w_cycle = ParseNumber<double>(key, value);
  else if (key == "w_adv") w_adv = ParseNumber<double>(key, value);
  else if (key == "beta1") beta1 = ParseNumber<double>(key, value);
  else if (key == "seed") seed = ParseNumber<uint64_t>(key, value);
  else UEN_THROW(ConfigError, "unknown training config key '", key, "'");
}

std::map<std::string, std::string> TrainConfig::ToMap() const {
  return {{"batch_size", std::to_string(batch_size)},
          {"seq_len", std::to_string(seq_len)},
          {"n_mels", std::to_string(n_mels)},
          {"epochs", std::to_string(epochs)},
          {"lr_gen", FormatDouble(lr_gen)},
          {"lr_disc", FormatDouble(lr_disc)},
          {"lr_min", FormatDouble(lr_min)},
          {"lr_const_epochs", std::to_string(lr_const_epochs)},
          {"w_cycle", FormatDouble(w_cycle)},
          {"w_adv", FormatDouble(w_adv)},
          {"beta1", FormatDouble(beta1)},
          {"seed", std::to_string(seed)}};
}

TrainConfig ReadTrainConfig(const std::string &path) {
  TrainConfig config;
  for (const auto &[key, value] : ReadKeyValueFile(path))
    config.Set(key, value);
  return config;
}

void WriteTrainConfig(const TrainConfig &config, const std::string &path) {
  WriteKeyValueFile(config.ToMap(), path);
}

std::pair<double, double> LrSchedule(int epoch, const TrainConfig &config) {
  if (epoch < 0 || epoch >= config.epochs)
    UEN_THROW(ConfigError, "epoch ", epoch, " outside [0, ", config.epochs,
              ")");
  if (epoch < config.lr_const_epochs)
    return {config.lr_gen, config.lr_disc};
  const int span = config.epochs - 1 - config.lr_const_epochs;
  const double frac =
      span == 0 ? 1.0
                : static_cast<double>(epoch - config.lr_const_epochs) / span;
  // std::lerp is exact at both ends, so epoch epochs-1 gives lr_min.
  auto ramp = [&](double base) { return std::lerp(base, config.lr_min, frac); };
  return {ramp(config.lr_gen), ramp(config.lr_disc)};
}

}  // namespace uen
