// uen/sim/corpus-builder.h

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

#ifndef UEN_SIM_CORPUS_BUILDER_H_
#define UEN_SIM_CORPUS_BUILDER_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uen/sim/manifest.h"
#include "uen/sim/noise-mixer.h"
#include "uen/sim/room-simulator.h"

namespace uen {

struct SimCondition {
  std::string name;
  std::pair<double, double> rt60_range_s = {0.0, 0.0};
  std::vector<double> snr_levels_db;       // empty: no noise
  std::vector<std::string> noise_type_ids;  // noise classes; empty: any

  bool reverberant() const { return rt60_range_s.second > 0; }
  bool noisy() const { return !snr_levels_db.empty(); }
  // Throws ConfigError unless 0 <= lo <= hi and every noise type is known.
  void Validate() const;
};

// Reverberation up to 1 s, then noise at 15, 10, 5 or 0 dB.
SimCondition TrainCondition();
// Reverberation up to 4 s, no noise.
SimCondition ReverbTestCondition();
std::vector<double> TestSnrLevels();  // -5 ... 15 dB in 5 dB steps

struct RirEntry {
  std::string id;
  RoomSpec room;  // target_rt60_s == 0 marks an anechoic entry
  Rir rir;
};

struct NoiseEntry {
  std::string id;
  NoiseClass type = NoiseClass::kWhite;
  Waveform wav;
};

struct SimPools {
  std::vector<RirEntry> rirs;
  std::vector<NoiseEntry> noises;
};

/**
   `count` RIRs with ids "<prefix>-rir-NNN" whose target RT60 values are
   stratified uniformly over rt60_range_s.  Rooms are drawn at random
   (larger rooms for RT60 above 1.5 s); an RT60 that no drawn room can
   reach under Sabine's formula yields an anechoic entry.
*/
std::vector<RirEntry> MakeRirPool(const std::string &prefix, int count,
                                  std::pair<double, double> rt60_range_s,
                                  uint64_t seed, int jobs = 1);

// per_class noises of each class, ids "<prefix>-<class>-NNN".
std::vector<NoiseEntry> MakeNoisePool(const std::string &prefix,
                                      const std::vector<NoiseClass> &classes,
                                      int per_class, double duration_s,
                                      uint64_t seed);

struct SimulatedUtterance {
  Waveform wav;
  std::map<std::string, std::string> provenance;
};

/**
   Applies a condition to one waveform: an RIR drawn uniformly from the
   pool entries whose RT60 lies in the condition's range, then a noise of
   an allowed class at an SNR drawn uniformly from the list.  The result is
   scaled down to a 0.99 peak if needed, which leaves the SNR unchanged.
   Throws InputError if the condition needs an empty pool selection.
*/
SimulatedUtterance SimulateUtterance(const Waveform &wav,
                                     const SimCondition &condition,
                                     const SimPools &pools, uint64_t seed);

/**
   Simulates every record of `clean` (paths relative to clean_root unless
   absolute) into out_dir/wav/<utt_id>.wav and writes out_dir/manifest.tsv
   whose paths are relative to out_dir.  Each utterance uses the seed
   MixSeed(seed, utt_id), so the output depends on neither order nor jobs.
   Returns the written manifest.
*/
Manifest BuildDegradedCorpus(const Manifest &clean,
                             const std::string &clean_root,
                             const SimCondition &condition,
                             const SimPools &pools, uint64_t seed,
                             const std::string &out_dir, int jobs = 1);

/**
   The test grid: a "reverb" cell (RT60 up to 4 s, no noise) and one cell
   "<noise class>_snr<level>" per noise class present in the pool and per
   TestSnrLevels() entry, without reverberation.  Each cell is built under
   out_dir/<cell> with seed MixSeed(seed, cell).
*/
std::map<std::string, Manifest> BuildTestConditions(
    const Manifest &clean, const std::string &clean_root,
    const SimPools &test_pools, uint64_t seed, const std::string &out_dir,
    int jobs = 1);

struct DisjointnessReport {
  std::set<std::string> shared_rirs;
  std::set<std::string> shared_noises;
  bool ok() const { return shared_rirs.empty() && shared_noises.empty(); }
};

// Compares the RIR and noise ids of two pools.
DisjointnessReport AuditPools(const SimPools &train, const SimPools &test);
// Compares the ids recorded in the provenance of two sets of manifests.
DisjointnessReport AuditManifests(const std::vector<Manifest> &train,
                                  const std::vector<Manifest> &test);

// path if absolute, else root/path.
std::string ResolvePath(const std::string &root, const std::string &path);

}  // namespace uen

#endif  // UEN_SIM_CORPUS_BUILDER_H_
