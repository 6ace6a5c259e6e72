// uen/cli/run-config.h

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

#ifndef UEN_CLI_RUN_CONFIG_H_
#define UEN_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uen/cyclegan/train-config.h"

namespace uen {

/**
   Settings for all subcommands.  Keys are either global (seed, run_dir,
   jobs) or "<section>.<name>" with section one of simulate, featurize,
   train, enhance, score.  A config file is a list of "key = value" lines;
   a "[section]" line prefixes the keys that follow it, and "[global]"
   switches back to unprefixed keys.  '#' starts a comment.

   Every key has a default (possibly empty, meaning unset).  Setting a key
   that is not known throws ConfigError.
*/
class RunConfig {
 public:
  RunConfig();

  void ReadFile(const std::string &path);
  void Set(const std::string &key, const std::string &value);
  // "key=value", as given to --set.
  void SetFromString(const std::string &assignment);

  bool IsKnown(const std::string &key) const;
  bool IsSet(const std::string &key) const;

  // The getters throw ConfigError if the key is unknown or unset, or if the
  // value does not parse.
  std::string GetString(const std::string &key) const;
  double GetDouble(const std::string &key) const;
  int64_t GetInt(const std::string &key) const;
  bool GetBool(const std::string &key) const;
  // Comma separated.
  std::vector<double> GetDoubleList(const std::string &key) const;
  std::vector<std::string> GetStringList(const std::string &key) const;

  uint64_t seed() const;
  std::string run_dir() const;
  int jobs() const;

  // TrainConfig from the train.* keys, with seed() as its seed.
  TrainConfig ToTrainConfig() const;

  // Global keys followed by the keys of `section`, in a form ReadFile
  // accepts.
  std::string Snapshot(const std::string &section) const;
  void WriteSnapshot(const std::string &section,
                     const std::string &path) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace uen

#endif  // UEN_CLI_RUN_CONFIG_H_
