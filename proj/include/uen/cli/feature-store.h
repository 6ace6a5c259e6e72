// uen/cli/feature-store.h

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

#ifndef UEN_CLI_FEATURE_STORE_H_
#define UEN_CLI_FEATURE_STORE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "uen/cyclegan/epoch-sampler.h"
#include "uen/dsp/feature-types.h"

namespace uen {

/**
   One line of a feature index, tab separated:
     utt_id  speaker_id  path  num_frames  run lengths
   The feature file holds only the frames kept by the VAD; the run lengths
   (comma separated, summing to num_frames) give the contiguous speech
   regions they came from, so that training crops do not straddle a gap.
   Paths are relative to the directory of the index unless absolute.
*/
struct FeatureIndexEntry {
  std::string utt_id;
  std::string speaker_id;
  std::string path;
  int64_t num_frames = 0;
  std::vector<int64_t> runs;
};

using FeatureIndex = std::vector<FeatureIndexEntry>;

// Throws FormatError on malformed lines, DataError on duplicate ids.
FeatureIndex ReadFeatureIndex(const std::string &path);
void WriteFeatureIndex(const FeatureIndex &index, const std::string &path);

// Lengths of the runs of true values in a VAD mask.
std::vector<int64_t> SpeechRuns(const std::vector<bool> &mask);

// Reads every feature file of an index.  Throws DataError if a file does
// not match its entry.
std::vector<TrainingUtterance> LoadTrainingUtterances(
    const std::string &index_path);

}  // namespace uen

#endif  // UEN_CLI_FEATURE_STORE_H_
