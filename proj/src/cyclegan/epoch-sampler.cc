// src/cyclegan/epoch-sampler.cc

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

#include "uen/cyclegan/epoch-sampler.h"

#include <numeric>

#include "uen/base/errors.h"
#include "uen/base/random.h"

namespace uen {

namespace {

void CheckDomain(const std::vector<TrainingUtterance> &utts, const char *name,
                 int64_t *feature_dim) {
  if (utts.empty())
    UEN_THROW(ConfigError, "the ", name, " training domain is empty");
  for (const auto &u : utts) {
    if (u.num_frames() == 0)
      UEN_THROW(ConfigError, "utterance ", u.id, " in the ", name,
                " domain has no frames");
    for (const auto &s : u.segments) {
      if (s.cols() == 0) continue;
      if (*feature_dim < 0) *feature_dim = s.rows();
      if (s.rows() != *feature_dim)
        UEN_THROW(DimensionError, "utterance ", u.id, " has ", s.rows(),
                  " feature dims, expected ", *feature_dim);
    }
  }
}

CropRecord ChooseCrop(const TrainingUtterance &utt, size_t index, int seq_len,
                      Rng &rng) {
  CropRecord crop;
  crop.utterance = index;
  int64_t positions = 0;
  for (const auto &s : utt.segments)
    if (s.cols() >= seq_len) positions += s.cols() - seq_len + 1;
  if (positions > 0) {
    int64_t pick = static_cast<int64_t>(UniformIndex(rng, positions));
    for (size_t i = 0; i < utt.segments.size(); i++) {
      const int64_t len = utt.segments[i].cols();
      if (len < seq_len) continue;
      if (pick < len - seq_len + 1) {
        crop.segment = i;
        crop.offset = pick;
        return crop;
      }
      pick -= len - seq_len + 1;
    }
  }
  size_t longest = 0;
  for (size_t i = 1; i < utt.segments.size(); i++)
    if (utt.segments[i].cols() > utt.segments[longest].cols()) longest = i;
  crop.segment = longest;
  crop.offset = static_cast<int64_t>(
      UniformIndex(rng, static_cast<uint64_t>(utt.segments[longest].cols())));
  crop.wrapped = true;
  return crop;
}

// Writes the crop as F x seq_len row-major at dst.
void CopyCrop(const TrainingUtterance &utt, const CropRecord &crop,
              int seq_len, float *dst) {
  const Eigen::MatrixXf &seg = utt.segments[crop.segment];
  const int64_t f = seg.rows(), len = seg.cols();
  for (int64_t i = 0; i < f; i++)
    for (int64_t j = 0; j < seq_len; j++)
      dst[i * seq_len + j] = seg(i, (crop.offset + j) % len);
}

}  // namespace

int64_t TrainingUtterance::num_frames() const {
  int64_t n = 0;
  for (const auto &s : segments) n += s.cols();
  return n;
}

std::vector<TrainingBatch> SampleEpoch(
    const std::vector<TrainingUtterance> &clean,
    const std::vector<TrainingUtterance> &degraded, int batch_size,
    int seq_len, uint64_t epoch_seed) {
  if (batch_size < 1 || seq_len < 1)
    UEN_THROW(ConfigError, "batch_size and seq_len must be positive");
  int64_t dim = -1;
  CheckDomain(clean, "clean", &dim);
  CheckDomain(degraded, "degraded", &dim);

  Rng order_rng(MixSeed(epoch_seed, "order"));
  Rng clean_rng(MixSeed(epoch_seed, "clean"));
  Rng degraded_rng(MixSeed(epoch_seed, "degraded"));
  std::vector<size_t> order(clean.size());
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order.begin(), order.end(), order_rng);

  const size_t num_batches = clean.size() / batch_size;
  const int64_t per_example = dim * seq_len;
  std::vector<TrainingBatch> batches;
  batches.reserve(num_batches);
  for (size_t b = 0; b < num_batches; b++) {
    TrainingBatch batch;
    Tensor<float>::Array src(batch_size * per_example);
    Tensor<float>::Array tgt(batch_size * per_example);
    for (int n = 0; n < batch_size; n++) {
      const size_t ci = order[b * batch_size + n];
      const CropRecord c = ChooseCrop(clean[ci], ci, seq_len, clean_rng);
      CopyCrop(clean[ci], c, seq_len, src.data() + n * per_example);
      batch.source_crops.push_back(c);

      const size_t ti = UniformIndex(degraded_rng, degraded.size());
      const CropRecord t = ChooseCrop(degraded[ti], ti, seq_len, degraded_rng);
      CopyCrop(degraded[ti], t, seq_len, tgt.data() + n * per_example);
      batch.target_crops.push_back(t);
    }
    const Shape shape{batch_size, 1, dim, seq_len};
    batch.source = Tensor<float>(shape, std::move(src));
    batch.target = Tensor<float>(shape, std::move(tgt));
    batches.push_back(std::move(batch));
  }
  return batches;
}

TrainingUtterance SplitAtMask(const std::string &id,
                              const Eigen::MatrixXf &features,
                              const std::vector<bool> &mask) {
  if (mask.size() != static_cast<size_t>(features.cols()))
    UEN_THROW(DimensionError, "mask has ", mask.size(), " entries for ",
              features.cols(), " frames");
  TrainingUtterance utt;
  utt.id = id;
  int64_t start = -1;
  for (int64_t t = 0; t <= features.cols(); t++) {
    const bool speech = t < features.cols() && mask[t];
    if (speech && start < 0) start = t;
    if (!speech && start >= 0) {
      utt.segments.push_back(features.middleCols(start, t - start));
      start = -1;
    }
  }
  return utt;
}

}  // namespace uen
