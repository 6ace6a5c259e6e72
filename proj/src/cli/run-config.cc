// src/cli/run-config.cc

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

#include "uen/cli/run-config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "uen/base/errors.h"
#include "uen/base/text-utils.h"

namespace uen {

namespace {

const char *const kSections[] = {"simulate", "featurize", "train", "enhance",
                                 "score"};

bool IsGlobalKey(const std::string &key) {
  return key.find('.') == std::string::npos;
}

std::string SectionOf(const std::string &key) {
  const size_t dot = key.find('.');
  return dot == std::string::npos ? "" : key.substr(0, dot);
}

}  // namespace

RunConfig::RunConfig() {
  values_ = {
      {"seed", ""},
      {"run_dir", ""},
      {"jobs", "1"},

      {"simulate.clean_manifest", ""},
      {"simulate.clean_root", ""},
      {"simulate.test_manifest", ""},
      {"simulate.test_root", ""},
      {"simulate.keep_fraction", "0.5"},
      {"simulate.train_rt60_max", "1.0"},
      {"simulate.train_snrs", "15,10,5,0"},
      {"simulate.train_rirs", "20"},
      {"simulate.test_rirs", "12"},
      {"simulate.noise_classes", "white,pink,tones,babble"},
      {"simulate.train_noises_per_class", "2"},
      {"simulate.test_noises_per_class", "2"},
      {"simulate.noise_duration_s", "10"},
      {"simulate.train_prefix", "train"},
      {"simulate.test_prefix", "test"},

      {"featurize.manifest", ""},
      {"featurize.root", ""},
      {"featurize.name", ""},
      {"featurize.stmc_window_s", "3.0"},
      {"featurize.vad_offset", "0.69314718055994531"},

      {"train.clean_index", ""},
      {"train.degraded_index", ""},
      {"train.resume", "false"},
      {"train.max_steps", "-1"},

      {"enhance.checkpoint", ""},
      {"enhance.index", ""},
      {"enhance.name", ""},

      {"score.trials", ""},
      {"score.conditions", ""},
      {"score.p_target", "0.05"},
      {"score.c_miss", "1"},
      {"score.c_fa", "1"},
  };
  for (const auto &[key, value] : TrainConfig{}.ToMap())
    if (key != "seed") values_["train." + key] = value;
}

void RunConfig::ReadFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) UEN_THROW(ConfigError, "cannot open config file ", path);
  std::string line, section;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string text = Trim(line);
    if (text.empty()) continue;
    try {
      if (text.front() == '[') {
        if (text.back() != ']')
          UEN_THROW(ConfigError, "bad section header '", text, "'");
        section = Trim(text.substr(1, text.size() - 2));
        if (section == "global") {
          section.clear();
          continue;
        }
        bool known = false;
        for (const char *s : kSections) known |= section == s;
        if (!known) UEN_THROW(ConfigError, "unknown section [", section, "]");
        continue;
      }
      const auto [key, value] = SplitKeyValue(text);
      Set(section.empty() ? key : section + "." + key, value);
    } catch (const ConfigError &e) {
      UEN_THROW(ConfigError, path, ":", line_no, ": ", e.what());
    }
  }
}

void RunConfig::Set(const std::string &key, const std::string &value) {
  if (!IsKnown(key)) UEN_THROW(ConfigError, "unknown config key '", key, "'");
  values_[key] = value;
}

void RunConfig::SetFromString(const std::string &assignment) {
  const auto [key, value] = SplitKeyValue(assignment);
  Set(key, value);
}

bool RunConfig::IsKnown(const std::string &key) const {
  return values_.count(key) > 0;
}

bool RunConfig::IsSet(const std::string &key) const {
  auto it = values_.find(key);
  return it != values_.end() && !it->second.empty();
}

std::string RunConfig::GetString(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end())
    UEN_THROW(ConfigError, "unknown config key '", key, "'");
  if (it->second.empty()) UEN_THROW(ConfigError, key, " is not set");
  return it->second;
}

double RunConfig::GetDouble(const std::string &key) const {
  const std::string text = GetString(key);
  std::istringstream is(text);
  double v;
  is >> v;
  if (is.fail() || !(is >> std::ws).eof())
    UEN_THROW(ConfigError, "bad number '", text, "' for ", key);
  return v;
}

int64_t RunConfig::GetInt(const std::string &key) const {
  const std::string text = GetString(key);
  int64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    UEN_THROW(ConfigError, "bad integer '", text, "' for ", key);
  return v;
}

bool RunConfig::GetBool(const std::string &key) const {
  const std::string text = GetString(key);
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  UEN_THROW(ConfigError, "bad boolean '", text, "' for ", key);
}

std::vector<double> RunConfig::GetDoubleList(const std::string &key) const {
  std::vector<double> out;
  for (const std::string &item : GetStringList(key)) {
    std::istringstream is(item);
    double v;
    is >> v;
    if (is.fail() || !(is >> std::ws).eof())
      UEN_THROW(ConfigError, "bad number '", item, "' in ", key);
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> RunConfig::GetStringList(
    const std::string &key) const {
  std::vector<std::string> out;
  for (const std::string &item : Split(GetString(key), ',')) {
    std::string t = Trim(item);
    if (t.empty()) UEN_THROW(ConfigError, "empty list item in ", key);
    out.push_back(std::move(t));
  }
  return out;
}

uint64_t RunConfig::seed() const {
  if (!IsSet("seed"))
    UEN_THROW(ConfigError, "no seed given; pass --seed or set seed in the "
              "config file");
  const std::string text = GetString("seed");
  uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    UEN_THROW(ConfigError, "bad seed '", text, "'");
  return v;
}

std::string RunConfig::run_dir() const { return GetString("run_dir"); }

int RunConfig::jobs() const {
  const int64_t jobs = GetInt("jobs");
  if (jobs < 1) UEN_THROW(ConfigError, "jobs must be positive, got ", jobs);
  return static_cast<int>(jobs);
}

TrainConfig RunConfig::ToTrainConfig() const {
  TrainConfig config;
  for (const auto &[key, value] : TrainConfig{}.ToMap()) {
    if (key == "seed") continue;
    config.Set(key, GetString("train." + key));
  }
  config.seed = seed();
  config.Validate();
  return config;
}

std::string RunConfig::Snapshot(const std::string &section) const {
  std::ostringstream os;
  for (const auto &[key, value] : values_)
    if (IsGlobalKey(key)) os << key << " = " << value << "\n";
  os << "\n[" << section << "]\n";
  const std::string prefix = section + ".";
  for (const auto &[key, value] : values_)
    if (SectionOf(key) == section)
      os << key.substr(prefix.size()) << " = " << value << "\n";
  return os.str();
}

void RunConfig::WriteSnapshot(const std::string &section,
                              const std::string &path) const {
  std::ofstream os(path);
  os << Snapshot(section);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
}

}  // namespace uen
