// src/cli/commands.cc

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

#include "uen/cli/commands.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "uen/base/errors.h"
#include "uen/base/parallel.h"
#include "uen/base/random.h"
#include "uen/base/text-utils.h"
#include "uen/cli/feature-store.h"
#include "uen/cyclegan/cyclegan-model.h"
#include "uen/cyclegan/trainer.h"
#include "uen/dsp/feature-functions.h"
#include "uen/dsp/feature-io.h"
#include "uen/dsp/wada-snr.h"
#include "uen/dsp/wave-io.h"
#include "uen/sim/corpus-builder.h"
#include "uen/sim/manifest.h"
#include "uen/sv/sv-metrics.h"

namespace fs = std::filesystem;

namespace uen {

namespace {

std::string Join(const fs::path &a, const std::string &b) {
  return (a / b).string();
}

fs::path MakeOutputDir(const RunConfig &config, const std::string &sub) {
  const fs::path dir = fs::path(config.run_dir()) / sub;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) UEN_THROW(InputError, "cannot create ", dir.string(), ": ",
                    ec.message());
  return dir;
}

void RequireFile(const std::string &path, const char *what) {
  if (!fs::is_regular_file(path))
    UEN_THROW(InputError, what, " ", path, " does not exist");
}

// Directory of `path`, or `override_root` when that is set.
std::string RootFor(const RunConfig &config, const std::string &root_key,
                    const std::string &path) {
  if (config.IsSet(root_key)) return config.GetString(root_key);
  return fs::path(path).parent_path().string();
}

// A name used as a directory or file stem.
void CheckName(const std::string &key, const std::string &name) {
  if (name.empty() || name == "." || name == ".." ||
      name.find('/') != std::string::npos)
    UEN_THROW(ConfigError, "bad name '", name, "' for ", key);
}

std::string HexHash(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string FileHash(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UEN_THROW(InputError, "cannot open ", path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return HexHash(StableHash(ss.str()));
}

std::vector<NoiseClass> NoiseClasses(const RunConfig &config) {
  std::vector<NoiseClass> out;
  for (const std::string &name : config.GetStringList("simulate.noise_classes"))
    out.push_back(ParseNoiseClass(name));
  return out;
}

int PositiveInt(const RunConfig &config, const std::string &key) {
  const int64_t v = config.GetInt(key);
  if (v < 1) UEN_THROW(ConfigError, key, " must be positive, got ", v);
  return static_cast<int>(v);
}

void WritePools(const SimPools &train, const SimPools &test,
                const std::string &path) {
  std::ofstream os(path);
  auto dump = [&](const char *side, const SimPools &pools) {
    for (const RirEntry &r : pools.rirs)
      os << side << "\trir\t" << r.id << "\t"
         << FormatDouble(r.room.target_rt60_s) << "\t"
         << FormatDouble(r.rir.measured_rt60_s) << "\n";
    for (const NoiseEntry &n : pools.noises)
      os << side << "\tnoise\t" << n.id << "\t" << NoiseClassName(n.type)
         << "\t-\n";
  };
  dump("train", train);
  dump("test", test);
  if (!os) UEN_THROW(InputError, "error writing ", path);
}

std::string Describe(const DisjointnessReport &report) {
  std::ostringstream os;
  int shown = 0;
  for (const auto *set : {&report.shared_rirs, &report.shared_noises})
    for (const std::string &id : *set)
      if (shown++ < 5) os << (shown > 1 ? ", " : "") << id;
  const size_t total = report.shared_rirs.size() + report.shared_noises.size();
  if (total > 5) os << " and " << total - 5 << " more";
  return os.str();
}

}  // namespace

void RunSimulate(const RunConfig &config, std::ostream &log) {
  const uint64_t seed = config.seed();
  const int jobs = config.jobs();
  const std::string clean_path = config.GetString("simulate.clean_manifest");
  RequireFile(clean_path, "clean manifest");
  const std::string clean_root =
      RootFor(config, "simulate.clean_root", clean_path);
  std::optional<std::string> test_path;
  if (config.IsSet("simulate.test_manifest")) {
    test_path = config.GetString("simulate.test_manifest");
    RequireFile(*test_path, "test manifest");
  }

  SimCondition train_cond;
  train_cond.name = "train";
  train_cond.rt60_range_s = {0.0, config.GetDouble("simulate.train_rt60_max")};
  train_cond.snr_levels_db = config.GetDoubleList("simulate.train_snrs");
  const std::vector<NoiseClass> classes = NoiseClasses(config);
  for (NoiseClass c : classes)
    train_cond.noise_type_ids.push_back(NoiseClassName(c));
  train_cond.Validate();
  const double keep = config.GetDouble("simulate.keep_fraction");
  const int train_rirs = PositiveInt(config, "simulate.train_rirs");
  const int test_rirs = PositiveInt(config, "simulate.test_rirs");
  const int train_noises = PositiveInt(config, "simulate.train_noises_per_class");
  const int test_noises = PositiveInt(config, "simulate.test_noises_per_class");
  const double noise_dur = config.GetDouble("simulate.noise_duration_s");
  const std::string train_prefix = config.GetString("simulate.train_prefix");
  const std::string test_prefix = config.GetString("simulate.test_prefix");

  // Pool ids are "<prefix>-rir-NNN" and "<prefix>-<class>-NNN".
  if (train_prefix == test_prefix)
    UEN_THROW(ConfigError, "train and test pools would share ids: both use "
              "the prefix '", train_prefix, "'");

  Manifest clean = ReadManifest(clean_path);
  if (clean.empty()) UEN_THROW(InputError, "clean manifest ", clean_path,
                               " is empty");
  std::optional<Manifest> test;
  std::string test_root;
  if (test_path) {
    test = ReadManifest(*test_path);
    test_root = RootFor(config, "simulate.test_root", *test_path);
  }

  int estimated = 0;
  for (const UtteranceRecord &r : clean) estimated += !r.snr_estimate_db;
  log << "simulate: estimating WADA-SNR for " << estimated << " of "
      << clean.size() << " clean utterances\n";
  ParallelFor(static_cast<int64_t>(clean.size()), jobs, [&](int64_t i) {
    UtteranceRecord &r = clean[i];
    if (!r.snr_estimate_db)
      r.snr_estimate_db = WadaSnr(ReadWaveFile(ResolvePath(clean_root, r.path)));
  });
  Manifest kept = FilterBySnr(clean, keep);
  for (UtteranceRecord &r : kept) {
    r.path = fs::absolute(ResolvePath(clean_root, r.path)).lexically_normal();
    r.domain = Domain::kCleanSource;
  }
  log << "simulate: kept " << kept.size() << " utterances with the highest "
      << "estimated SNR\n";

  SimPools train_pools, test_pools;
  train_pools.rirs = MakeRirPool(train_prefix, train_rirs,
                                 train_cond.rt60_range_s,
                                 MixSeed(seed, "train-rirs"), jobs);
  train_pools.noises = MakeNoisePool(train_prefix, classes, train_noises,
                                     noise_dur, MixSeed(seed, "train-noises"));
  if (test) {
    test_pools.rirs = MakeRirPool(test_prefix, test_rirs,
                                  ReverbTestCondition().rt60_range_s,
                                  MixSeed(seed, "test-rirs"), jobs);
    test_pools.noises = MakeNoisePool(test_prefix, classes, test_noises,
                                      noise_dur, MixSeed(seed, "test-noises"));
  }
  const DisjointnessReport pool_audit = AuditPools(train_pools, test_pools);
  if (!pool_audit.ok())
    UEN_THROW(ConfigError, "train and test pools share ids: ",
              Describe(pool_audit));

  const fs::path out = MakeOutputDir(config, "simulate");
  config.WriteSnapshot("simulate", Join(out, "config.snapshot"));
  WritePools(train_pools, test_pools, Join(out, "pools.tsv"));
  fs::create_directories(out / "clean");
  WriteManifest(kept, Join(out / "clean", "manifest.tsv"));

  log << "simulate: building the degraded training corpus\n";
  const Manifest train = BuildDegradedCorpus(
      kept, "", train_cond, train_pools, MixSeed(seed, "train"),
      (out / "train").string(), jobs);
  if (test) {
    log << "simulate: building the test grid\n";
    const std::map<std::string, Manifest> cells = BuildTestConditions(
        *test, test_root, test_pools, MixSeed(seed, "test"),
        (out / "test").string(), jobs);
    std::vector<Manifest> test_manifests;
    for (const auto &[name, m] : cells) test_manifests.push_back(m);
    const DisjointnessReport audit = AuditManifests({train}, test_manifests);
    if (!audit.ok())
      UEN_THROW(DataError, "train and test manifests share ids: ",
                Describe(audit));
    log << "simulate: wrote " << cells.size() << " test cells\n";
  }
  log << "simulate: done, outputs in " << out.string() << "\n";
}

void RunFeaturize(const RunConfig &config, std::ostream &log) {
  const int jobs = config.jobs();
  const std::string manifest_path = config.GetString("featurize.manifest");
  const std::string name = config.GetString("featurize.name");
  CheckName("featurize.name", name);
  RequireFile(manifest_path, "manifest");
  const std::string root = RootFor(config, "featurize.root", manifest_path);
  const double window_s = config.GetDouble("featurize.stmc_window_s");
  if (!(window_s > 0))
    UEN_THROW(ConfigError, "featurize.stmc_window_s must be positive");
  const double vad_offset = config.GetDouble("featurize.vad_offset");
  const Manifest manifest = ReadManifest(manifest_path);

  const fs::path out = MakeOutputDir(config, "features/" + name);
  config.WriteSnapshot("featurize", Join(out, "config.snapshot"));
  fs::create_directories(out / "feats");

  struct Outcome {
    std::optional<FeatureIndexEntry> entry;
    std::string excluded, error;
  };
  std::vector<Outcome> outcomes(manifest.size());
  ParallelFor(static_cast<int64_t>(manifest.size()), jobs, [&](int64_t i) {
    const UtteranceRecord &r = manifest[i];
    Outcome &o = outcomes[i];
    try {
      const Waveform wav = ReadWaveFile(ResolvePath(root, r.path));
      const FeatureMatrix fbank = LogMelFbank(wav);
      const std::vector<bool> mask = EnergyVad(wav, {}, vad_offset);
      const std::vector<int64_t> runs = SpeechRuns(mask);
      if (runs.empty()) {
        o.excluded = "no frames pass the energy VAD";
        return;
      }
      const FeatureMatrix feat = SelectVoicedFrames(Stmc(fbank, window_s), mask);
      FeatureIndexEntry e;
      e.utt_id = r.utt_id;
      e.speaker_id = r.speaker_id;
      e.path = "feats/" + r.utt_id + ".feat";
      e.num_frames = feat.num_frames();
      e.runs = runs;
      WriteFeatureFile(feat, Join(out, e.path));
      o.entry = std::move(e);
    } catch (const Error &err) {
      o.error = err.what();
    }
  });

  FeatureIndex index;
  std::ofstream excluded(out / "excluded.tsv"), errors(out / "errors.log");
  int num_errors = 0;
  for (size_t i = 0; i < manifest.size(); i++) {
    const Outcome &o = outcomes[i];
    if (o.entry) index.push_back(*o.entry);
    if (!o.excluded.empty())
      excluded << manifest[i].utt_id << '\t' << o.excluded << '\n';
    if (!o.error.empty()) {
      errors << manifest[i].utt_id << '\t' << o.error << '\n';
      num_errors++;
    }
  }
  WriteFeatureIndex(index, Join(out, "index.tsv"));
  log << "featurize: " << index.size() << " of " << manifest.size()
      << " utterances written to " << out.string() << "\n";
  if (num_errors > 0)
    UEN_THROW(InputError, num_errors, " utterance(s) failed; see ",
              Join(out, "errors.log"));
}

namespace {

// The checkpoint with the highest epoch number in dir, if any.
std::optional<std::string> LatestEpochCheckpoint(const fs::path &dir) {
  std::optional<std::string> best;
  int best_epoch = -1;
  if (!fs::is_directory(dir)) return best;
  for (const fs::directory_entry &entry : fs::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    int epoch = -1;
    char tail = 0;
    if (std::sscanf(file.c_str(), "epoch-%d.ckp%c", &epoch, &tail) == 2 &&
        tail == 't' && file.size() == std::string("epoch-000.ckpt").size() &&
        epoch > best_epoch) {
      best_epoch = epoch;
      best = entry.path().string();
    }
  }
  return best;
}

// Keeps the first `lines` lines of a text file.
void TruncateLines(const std::string &path, int64_t lines) {
  std::ifstream is(path);
  std::string kept, line;
  for (int64_t i = 0; i < lines && std::getline(is, line); i++)
    kept += line + "\n";
  is.close();
  std::ofstream os(path, std::ios::trunc);
  os << kept;
}

void CheckDims(const std::vector<TrainingUtterance> &utts, int dim,
               const std::string &what) {
  for (const TrainingUtterance &u : utts)
    for (const Eigen::MatrixXf &s : u.segments)
      if (s.rows() != dim)
        UEN_THROW(DimensionError, what, " utterance ", u.id, " has ",
                  s.rows(), "-dimensional features; the model expects ", dim);
}

}  // namespace

void RunTrain(const RunConfig &config, std::ostream &log) {
  const TrainConfig train_config = config.ToTrainConfig();
  const std::string clean_index = config.GetString("train.clean_index");
  const std::string degraded_index = config.GetString("train.degraded_index");
  RequireFile(clean_index, "clean feature index");
  RequireFile(degraded_index, "degraded feature index");
  const std::vector<TrainingUtterance> clean =
      LoadTrainingUtterances(clean_index);
  const std::vector<TrainingUtterance> degraded =
      LoadTrainingUtterances(degraded_index);
  CheckDims(clean, train_config.n_mels, "clean");
  CheckDims(degraded, train_config.n_mels, "degraded");

  const fs::path out = MakeOutputDir(config, "train");
  const fs::path ckpt_dir = out / "checkpoints";
  const std::string log_path = Join(out, "train_log.jsonl");

  TrainOptions options;
  options.checkpoint_dir = ckpt_dir.string();
  options.max_steps = config.GetInt("train.max_steps");
  GeneratorSpec gen_spec;
  gen_spec.feature_dim = train_config.n_mels;
  std::optional<CycleGanModel<float>> model;
  if (config.GetBool("train.resume")) {
    if (const auto latest = LatestEpochCheckpoint(ckpt_dir)) {
      LoadedCheckpoint loaded = LoadCheckpoint(*latest);
      if (loaded.model.gen_spec().feature_dim != train_config.n_mels)
        UEN_THROW(DimensionError, *latest, " holds a model for ",
                  loaded.model.gen_spec().feature_dim, " features, not ",
                  train_config.n_mels);
      options.start_epoch = static_cast<int>(loaded.epoch);
      options.start_step = loaded.step;
      model.emplace(std::move(loaded.model));
      TruncateLines(log_path, loaded.step);
      log << "train: resuming from " << *latest << " at epoch "
          << options.start_epoch << ", step " << options.start_step << "\n";
    } else {
      log << "train: nothing to resume in " << ckpt_dir.string()
          << ", starting from scratch\n";
    }
  }
  if (!model) {
    model.emplace(gen_spec, DiscriminatorSpec{}, train_config.seed);
    std::ofstream(log_path, std::ios::trunc);
  }
  config.WriteSnapshot("train", Join(out, "config.snapshot"));

  std::ofstream train_log(log_path, std::ios::app);
  if (!train_log) UEN_THROW(InputError, "cannot write ", log_path);
  options.log = &train_log;
  log << "train: " << clean.size() << " clean and " << degraded.size()
      << " degraded utterances\n";
  const TrainSummary summary =
      Train(&*model, clean, degraded, train_config, options);
  log << "train: " << summary.steps << " steps, "
      << summary.epochs_completed << " epochs; final checkpoint "
      << Join(ckpt_dir, "final.ckpt") << "\n";
}

void RunEnhance(const RunConfig &config, std::ostream &log) {
  const int jobs = config.jobs();
  const std::string ckpt_path = config.GetString("enhance.checkpoint");
  const std::string index_path = config.GetString("enhance.index");
  const std::string name = config.GetString("enhance.name");
  CheckName("enhance.name", name);
  RequireFile(ckpt_path, "checkpoint");
  RequireFile(index_path, "feature index");
  const LoadedCheckpoint ckpt = LoadCheckpoint(ckpt_path);
  const int dim = ckpt.model.gen_spec().feature_dim;
  const FeatureIndex index = ReadFeatureIndex(index_path);
  const std::string root = fs::path(index_path).parent_path().string();

  std::vector<FeatureMatrix> feats(index.size());
  ParallelFor(static_cast<int64_t>(index.size()), jobs, [&](int64_t i) {
    feats[i] = ReadFeatureFile(ResolvePath(root, index[i].path));
    if (feats[i].num_dims() != dim)
      UEN_THROW(DimensionError, "utterance ", index[i].utt_id, " has ",
                feats[i].num_dims(), "-dimensional features but ", ckpt_path,
                " expects ", dim);
    if (feats[i].num_frames() != index[i].num_frames)
      UEN_THROW(DataError, index[i].path, " has ", feats[i].num_frames(),
                " frames but the index says ", index[i].num_frames);
  });

  const fs::path out = MakeOutputDir(config, "enhance/" + name);
  config.WriteSnapshot("enhance", Join(out, "config.snapshot"));
  fs::create_directories(out / "feats");
  {
    std::ofstream prov(out / "provenance.txt");
    prov << "checkpoint = " << fs::absolute(ckpt_path).lexically_normal().string()
         << "\ncheckpoint_hash = " << FileHash(ckpt_path)
         << "\ncheckpoint_epoch = " << ckpt.epoch
         << "\ncheckpoint_step = " << ckpt.step
         << "\nsource_index = "
         << fs::absolute(index_path).lexically_normal().string() << "\n";
  }

  // The generator pads short inputs itself but needs at least 4 frames.
  std::vector<char> done(index.size(), 0);
  ParallelFor(static_cast<int64_t>(index.size()), jobs, [&](int64_t i) {
    if (feats[i].num_frames() < 4) return;
    const FeatureMatrix mfcc = Enhance(ckpt.model, feats[i]);
    WriteFeatureFile(mfcc, Join(out, "feats/" + index[i].utt_id + ".feat"));
    done[i] = 1;
  });
  FeatureIndex out_index;
  std::ofstream excluded(out / "excluded.tsv");
  for (size_t i = 0; i < index.size(); i++) {
    if (!done[i]) {
      excluded << index[i].utt_id << "\tfewer than 4 frames\n";
      continue;
    }
    FeatureIndexEntry e = index[i];
    e.path = "feats/" + e.utt_id + ".feat";
    out_index.push_back(std::move(e));
  }
  WriteFeatureIndex(out_index, Join(out, "index.tsv"));
  log << "enhance: " << out_index.size() << " of " << index.size()
      << " utterances written to " << out.string() << "\n";
}

void RunScore(const RunConfig &config, std::ostream &log) {
  const int jobs = config.jobs();
  const std::string trials_path = config.GetString("score.trials");
  RequireFile(trials_path, "trial list");
  DcfParams params;
  params.p_target = config.GetDouble("score.p_target");
  params.c_miss = config.GetDouble("score.c_miss");
  params.c_fa = config.GetDouble("score.c_fa");
  params.Validate();

  std::vector<std::pair<std::string, std::string>> conditions;
  for (const std::string &item : config.GetStringList("score.conditions")) {
    auto [name, path] = SplitKeyValue(item);
    CheckName("score.conditions", name);
    if (name == "mean")
      UEN_THROW(ConfigError, "'mean' is reserved for the aggregate row");
    for (const auto &[other, p] : conditions)
      if (other == name)
        UEN_THROW(ConfigError, "condition '", name, "' given twice");
    RequireFile(path, "feature index");
    conditions.emplace_back(name, path);
  }
  const std::vector<Trial> trials = ReadTrialFile(trials_path);

  const fs::path out = MakeOutputDir(config, "score");
  config.WriteSnapshot("score", Join(out, "config.snapshot"));
  std::ostringstream table;
  table << "condition\teer\tmin_dcf\tn_target\tn_nontarget\n";
  double sum_eer = 0, sum_dcf = 0;
  for (const auto &[name, index_path] : conditions) {
    const FeatureIndex index = ReadFeatureIndex(index_path);
    const std::string root = fs::path(index_path).parent_path().string();
    std::vector<Eigen::VectorXd> embeddings(index.size());
    ParallelFor(static_cast<int64_t>(index.size()), jobs, [&](int64_t i) {
      FeatureMatrix feat = ReadFeatureFile(ResolvePath(root, index[i].path));
      if (feat.kind == FeatureKind::kLogMelFbank)
        feat = DctToMfcc(feat, static_cast<int>(feat.num_dims()));
      embeddings[i] = ToyEmbed(feat);
    });
    EmbeddingMap emb;
    for (size_t i = 0; i < index.size(); i++)
      emb[index[i].utt_id] = std::move(embeddings[i]);
    const TrialScores scores = ScoreTrials(emb, emb, trials);
    WriteScoreFile(scores, Join(out, name + ".scores"));
    const MetricReport report = EvaluateScores(scores, params);
    std::ofstream(out / (name + ".json")) << MetricReportToJson(report)
                                          << "\n";
    table << name << '\t' << FormatDouble(report.eer) << '\t'
          << FormatDouble(report.min_dcf) << '\t' << report.n_target << '\t'
          << report.n_nontarget << '\n';
    sum_eer += report.eer;
    sum_dcf += report.min_dcf;
    log << "score: " << name << " eer " << report.eer << " min_dcf "
        << report.min_dcf << "\n";
  }
  const double n = static_cast<double>(conditions.size());
  table << "mean\t" << FormatDouble(sum_eer / n) << '\t'
        << FormatDouble(sum_dcf / n) << "\t-\t-\n";
  std::ofstream agg(out / "aggregate.tsv");
  agg << table.str();
  if (!agg) UEN_THROW(InputError, "error writing aggregate table");
}

int ExitCodeFor(const std::exception &e) {
  if (dynamic_cast<const ConfigError *>(&e) ||
      dynamic_cast<const UsageError *>(&e) ||
      dynamic_cast<const InputError *>(&e) ||
      dynamic_cast<const FormatError *>(&e) ||
      dynamic_cast<const DataError *>(&e) ||
      dynamic_cast<const DimensionError *>(&e) ||
      dynamic_cast<const CheckpointError *>(&e) ||
      dynamic_cast<const MetricUndefinedError *>(&e))
    return kExitUsage;
  return kExitInternal;
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Unsupervised feature enhancement pipeline", "uen"};
  app.require_subcommand(1);
  struct Flags {
    std::string config_file, run_dir;
    std::optional<uint64_t> seed;
    std::optional<int> jobs;
    std::vector<std::string> sets;
  } flags;
  using Command = void (*)(const RunConfig &, std::ostream &);
  const std::vector<std::tuple<const char *, const char *, Command>> commands =
      {{"simulate", "Build degraded training corpora and test grids",
        &RunSimulate},
       {"featurize", "Extract log mel-filterbank features", &RunFeaturize},
       {"train", "Train the CycleGAN", &RunTrain},
       {"enhance", "Enhance features with a trained checkpoint", &RunEnhance},
       {"score", "Score speaker verification trials", &RunScore}};
  for (const auto &[name, help, fn] : commands) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", flags.config_file, "Config file");
    sub->add_option("--seed", flags.seed,
                    "Random seed (required here or in the config)");
    sub->add_option("--set", flags.sets, "Override a config key (key=value)");
    sub->add_option("-j,--jobs", flags.jobs, "Worker threads");
    sub->add_option("--run-dir", flags.run_dir, "Run directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "uen: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App *chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    RunConfig config;
    if (!flags.config_file.empty()) config.ReadFile(flags.config_file);
    for (const std::string &s : flags.sets) config.SetFromString(s);
    if (flags.seed) config.Set("seed", std::to_string(*flags.seed));
    if (flags.jobs) config.Set("jobs", std::to_string(*flags.jobs));
    if (!flags.run_dir.empty()) config.Set("run_dir", flags.run_dir);
    config.seed();
    config.jobs();
    config.run_dir();
    for (const auto &[cmd, help, fn] : commands)
      if (name == cmd) fn(config, out);
  } catch (const std::exception &e) {
    err << "uen " << name << ": error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return kExitOk;
}

}  // namespace uen
