// uen/cyclegan/epoch-sampler.h

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

#ifndef UEN_CYCLEGAN_EPOCH_SAMPLER_H_
#define UEN_CYCLEGAN_EPOCH_SAMPLER_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uen/autodiff/tensor.h"

namespace uen {

// Features of one utterance after VAD frame removal, kept as the runs of
// contiguous speech frames (each F x T_i) so that crops never straddle a
// removed region.
struct TrainingUtterance {
  std::string id;
  std::vector<Eigen::MatrixXf> segments;

  int64_t num_frames() const;
};

struct CropRecord {
  size_t utterance = 0;
  size_t segment = 0;
  int64_t offset = 0;
  bool wrapped = false;  // segment shorter than the crop, tiled cyclically
};

struct TrainingBatch {
  Tensor<float> source;  // [N, 1, F, seq_len], clean domain
  Tensor<float> target;  // [N, 1, F, seq_len], degraded domain
  std::vector<CropRecord> source_crops;
  std::vector<CropRecord> target_crops;
};

/**
   Draws the batches of one epoch.  Every clean utterance contributes exactly
   one crop, in an order shuffled by epoch_seed; degraded utterances are
   drawn uniformly with replacement.  The crop start is uniform over all
   valid positions inside segments of at least seq_len frames; if no segment
   is long enough the longest one is tiled from a random start.  The final
   partial batch is dropped.

   Throws ConfigError if either domain is empty or holds no frames, and
   DimensionError if feature dimensions disagree.
*/
std::vector<TrainingBatch> SampleEpoch(
    const std::vector<TrainingUtterance> &clean,
    const std::vector<TrainingUtterance> &degraded, int batch_size,
    int seq_len, uint64_t epoch_seed);

// Splits F x T features at the frames where mask is false.
TrainingUtterance SplitAtMask(const std::string &id,
                              const Eigen::MatrixXf &features,
                              const std::vector<bool> &mask);

}  // namespace uen

#endif  // UEN_CYCLEGAN_EPOCH_SAMPLER_H_
