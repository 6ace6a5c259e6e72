// src/sim/corpus-builder.cc

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

#include "uen/sim/corpus-builder.h"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "uen/base/errors.h"
#include "uen/base/parallel.h"
#include "uen/base/random.h"
#include "uen/dsp/wave-io.h"

namespace uen {

void SimCondition::Validate() const {
  const auto [lo, hi] = rt60_range_s;
  if (!(lo >= 0 && lo <= hi))
    UEN_THROW(ConfigError, "condition ", name, ": bad RT60 range [", lo, ", ",
              hi, "]");
  for (const std::string &t : noise_type_ids) ParseNoiseClass(t);
}

SimCondition TrainCondition() {
  return {"train", {0.0, 1.0}, {15, 10, 5, 0}, {}};
}

SimCondition ReverbTestCondition() { return {"reverb", {0.0, 4.0}, {}, {}}; }

std::vector<double> TestSnrLevels() { return {-5, 0, 5, 10, 15}; }

namespace {

std::string Numbered(const std::string &stem, int k) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "-%03d", k);
  return stem + buf;
}

RoomSpec DrawRoom(Rng &rng, double rt60) {
  const bool large = rt60 > 1.5;
  RoomSpec room;
  room.dimensions_m = {large ? UniformRange(rng, 8, 12) : UniformRange(rng, 3, 10),
                       large ? UniformRange(rng, 6, 10) : UniformRange(rng, 3, 8),
                       large ? UniformRange(rng, 3, 4.5)
                             : UniformRange(rng, 2.5, 4)};
  auto point = [&] {
    std::array<double, 3> p;
    for (int i = 0; i < 3; i++)
      p[i] = UniformRange(rng, 0.5, room.dimensions_m[i] - 0.5);
    return p;
  };
  room.source_pos_m = point();
  do {
    room.mic_pos_m = point();
  } while (std::hypot(room.mic_pos_m[0] - room.source_pos_m[0],
                      room.mic_pos_m[1] - room.source_pos_m[1],
                      room.mic_pos_m[2] - room.source_pos_m[2]) < 1.0);
  room.target_rt60_s = rt60;
  return room;
}

bool Feasible(const RoomSpec &room) {
  return 0.161 * room.Volume() / (room.SurfaceArea() * room.target_rt60_s) <=
         1.0;
}

}  // namespace

std::vector<RirEntry> MakeRirPool(const std::string &prefix, int count,
                                  std::pair<double, double> rt60_range_s,
                                  uint64_t seed, int jobs) {
  const auto [lo, hi] = rt60_range_s;
  if (count < 1) UEN_THROW(ConfigError, "RIR pool size ", count);
  if (!(lo >= 0 && lo <= hi))
    UEN_THROW(ConfigError, "bad RT60 range [", lo, ", ", hi, "]");
  std::vector<RirEntry> pool(count);
  ParallelFor(count, jobs, [&](int64_t k) {
    Rng rng(MixSeed(seed, static_cast<uint64_t>(k)));
    const double rt60 = lo + (hi - lo) * (k + UniformUnit(rng)) / count;
    RirEntry &e = pool[k];
    e.id = Numbered(prefix + "-rir", static_cast<int>(k));
    bool found = false;
    if (rt60 > 0) {
      for (int attempt = 0; attempt < 8 && !found; attempt++) {
        e.room = DrawRoom(rng, rt60);
        found = Feasible(e.room);
      }
    }
    if (!found) {
      e.room = DrawRoom(rng, 0.0);
      e.room.target_rt60_s = 0.0;
    }
    e.rir = GenerateRir(e.room, MixSeed(seed, e.id));
  });
  return pool;
}

std::vector<NoiseEntry> MakeNoisePool(const std::string &prefix,
                                      const std::vector<NoiseClass> &classes,
                                      int per_class, double duration_s,
                                      uint64_t seed) {
  if (per_class < 1) UEN_THROW(ConfigError, "noises per class ", per_class);
  std::vector<NoiseEntry> pool;
  for (NoiseClass c : classes) {
    for (int k = 0; k < per_class; k++) {
      NoiseEntry e;
      e.id = Numbered(prefix + "-" + NoiseClassName(c), k);
      e.type = c;
      e.wav = MakeNoise(c, duration_s, MixSeed(seed, e.id));
      pool.push_back(std::move(e));
    }
  }
  return pool;
}

SimulatedUtterance SimulateUtterance(const Waveform &wav,
                                     const SimCondition &condition,
                                     const SimPools &pools, uint64_t seed) {
  condition.Validate();
  Rng rng(seed);
  SimulatedUtterance out;
  out.wav = wav;
  if (condition.reverberant()) {
    std::vector<const RirEntry *> eligible;
    for (const RirEntry &e : pools.rirs)
      if (e.room.target_rt60_s >= condition.rt60_range_s.first &&
          e.room.target_rt60_s <= condition.rt60_range_s.second)
        eligible.push_back(&e);
    if (eligible.empty())
      UEN_THROW(InputError, "no RIR in the pool for condition ",
                condition.name);
    const RirEntry &rir = *eligible[UniformIndex(rng, eligible.size())];
    out.wav = AddReverb(out.wav, rir.rir);
    out.provenance["rir"] = rir.id;
    out.provenance["rt60"] = FormatDouble(rir.room.target_rt60_s);
  }
  if (condition.noisy()) {
    std::vector<const NoiseEntry *> eligible;
    for (const NoiseEntry &e : pools.noises) {
      bool allowed = condition.noise_type_ids.empty();
      for (const std::string &t : condition.noise_type_ids)
        allowed |= t == NoiseClassName(e.type);
      if (allowed) eligible.push_back(&e);
    }
    if (eligible.empty())
      UEN_THROW(InputError, "no noise in the pool for condition ",
                condition.name);
    const NoiseEntry &noise = *eligible[UniformIndex(rng, eligible.size())];
    const double snr =
        condition.snr_levels_db[UniformIndex(rng,
                                             condition.snr_levels_db.size())];
    out.wav = MixNoise(out.wav, noise.wav, snr, rng());
    out.provenance["noise"] = noise.id;
    out.provenance["snr_db"] = FormatDouble(snr);
  }
  const float peak =
      out.wav.samples.size() ? out.wav.samples.cwiseAbs().maxCoeff() : 0.0f;
  if (peak > 0.99f) out.wav.samples *= 0.99f / peak;
  return out;
}

std::string ResolvePath(const std::string &root, const std::string &path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || root.empty()) return path;
  return (std::filesystem::path(root) / p).string();
}

Manifest BuildDegradedCorpus(const Manifest &clean,
                             const std::string &clean_root,
                             const SimCondition &condition,
                             const SimPools &pools, uint64_t seed,
                             const std::string &out_dir, int jobs) {
  condition.Validate();
  CheckUniqueIds(clean);
  if (condition.reverberant() && pools.rirs.empty())
    UEN_THROW(InputError, "condition ", condition.name,
              " needs RIRs but the pool is empty");
  if (condition.noisy() && pools.noises.empty())
    UEN_THROW(InputError, "condition ", condition.name,
              " needs noises but the pool is empty");
  std::filesystem::create_directories(std::filesystem::path(out_dir) / "wav");
  Manifest out(clean.size());
  ParallelFor(static_cast<int64_t>(clean.size()), jobs, [&](int64_t i) {
    const UtteranceRecord &in = clean[i];
    const Waveform wav = ReadWaveFile(ResolvePath(clean_root, in.path));
    const SimulatedUtterance sim =
        SimulateUtterance(wav, condition, pools, MixSeed(seed, in.utt_id));
    UtteranceRecord &r = out[i];
    r.utt_id = in.utt_id;
    r.speaker_id = in.speaker_id;
    r.path = "wav/" + in.utt_id + ".wav";
    r.domain = Domain::kDegradedTarget;
    r.provenance = sim.provenance;
    r.provenance["condition"] = condition.name;
    WriteWaveFile(sim.wav, ResolvePath(out_dir, r.path));
  });
  WriteManifest(out, (std::filesystem::path(out_dir) / "manifest.tsv").string());
  return out;
}

std::map<std::string, Manifest> BuildTestConditions(
    const Manifest &clean, const std::string &clean_root,
    const SimPools &test_pools, uint64_t seed, const std::string &out_dir,
    int jobs) {
  std::vector<SimCondition> cells = {ReverbTestCondition()};
  std::set<NoiseClass> types;
  for (const NoiseEntry &e : test_pools.noises) types.insert(e.type);
  for (NoiseClass t : types)
    for (double snr : TestSnrLevels())
      cells.push_back({std::string(NoiseClassName(t)) + "_snr" +
                           FormatDouble(snr),
                       {0.0, 0.0},
                       {snr},
                       {NoiseClassName(t)}});
  std::map<std::string, Manifest> out;
  for (const SimCondition &cell : cells)
    out[cell.name] = BuildDegradedCorpus(
        clean, clean_root, cell, test_pools, MixSeed(seed, cell.name),
        (std::filesystem::path(out_dir) / cell.name).string(), jobs);
  return out;
}

DisjointnessReport AuditPools(const SimPools &train, const SimPools &test) {
  DisjointnessReport report;
  std::set<std::string> ids;
  for (const RirEntry &e : train.rirs) ids.insert(e.id);
  for (const RirEntry &e : test.rirs)
    if (ids.count(e.id)) report.shared_rirs.insert(e.id);
  ids.clear();
  for (const NoiseEntry &e : train.noises) ids.insert(e.id);
  for (const NoiseEntry &e : test.noises)
    if (ids.count(e.id)) report.shared_noises.insert(e.id);
  return report;
}

DisjointnessReport AuditManifests(const std::vector<Manifest> &train,
                                  const std::vector<Manifest> &test) {
  auto collect = [](const std::vector<Manifest> &ms, const char *key) {
    std::set<std::string> ids;
    for (const Manifest &m : ms)
      for (const UtteranceRecord &r : m) {
        const auto it = r.provenance.find(key);
        if (it != r.provenance.end()) ids.insert(it->second);
      }
    return ids;
  };
  DisjointnessReport report;
  for (const char *key : {"rir", "noise"}) {
    const std::set<std::string> a = collect(train, key), b = collect(test, key);
    auto &shared = key[0] == 'r' ? report.shared_rirs : report.shared_noises;
    for (const std::string &id : b)
      if (a.count(id)) shared.insert(id);
  }
  return report;
}

}  // namespace uen
