// uen/cli/commands.h

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

#ifndef UEN_CLI_COMMANDS_H_
#define UEN_CLI_COMMANDS_H_

#include <exception>
#include <ostream>

#include "uen/cli/run-config.h"

namespace uen {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

/**
   Writes under <run_dir>/simulate:
     clean/manifest.tsv       clean records that pass the WADA-SNR filter
     train/                   their degraded copies (wav/ and manifest.tsv)
     test/<cell>/             the test grid, if simulate.test_manifest is set
     pools.tsv                the RIR and noise pools used for each side
     config.snapshot
   Refuses to run, before any audio is written, if the train and test pools
   would share an id.
*/
void RunSimulate(const RunConfig &config, std::ostream &log);

/**
   Writes <run_dir>/features/<featurize.name>/ with one log mel-filterbank
   file per utterance (STMC over the whole utterance, then only the frames
   the energy VAD keeps), index.tsv, excluded.tsv (utterances without
   speech frames, with the reason), errors.log and config.snapshot.  Throws
   InputError after writing the index if any file failed.
*/
void RunFeaturize(const RunConfig &config, std::ostream &log);

/**
   Trains on two feature indexes and writes <run_dir>/train/ with
   checkpoints/epoch-NNN.ckpt, checkpoints/final.ckpt, train_log.jsonl and
   config.snapshot.  With train.resume the latest epoch checkpoint is
   loaded and the log is cut back to its step before training continues.
*/
void RunTrain(const RunConfig &config, std::ostream &log);

/**
   Maps every utterance of enhance.index through g_t2s and stores MFCCs in
   <run_dir>/enhance/<enhance.name>/, with index.tsv and provenance.txt
   naming the checkpoint.  Throws DimensionError if the feature dimension
   differs from the model's.
*/
void RunEnhance(const RunConfig &config, std::ostream &log);

/**
   score.conditions is a list "name=index,name=index".  For each condition
   every utterance is embedded with ToyEmbed on MFCCs (log mel features are
   converted first) and the trials are scored by cosine similarity.
   Writes <run_dir>/score/<name>.scores, <name>.json and aggregate.tsv,
   whose last row is the mean over conditions.
*/
void RunScore(const RunConfig &config, std::ostream &log);

// kExitUsage for errors caused by the inputs or configuration,
// kExitInternal otherwise.
int ExitCodeFor(const std::exception &e);

// The `uen` command line.  Returns the exit code.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace uen

#endif  // UEN_CLI_COMMANDS_H_
