// tests/support/synthetic-task.cc

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

#include "support/synthetic-task.h"

#include <cmath>

#include "uen/base/random.h"

namespace uen {
namespace testing {

namespace {

constexpr int kCurveOrder = 6;

// Random smooth curve: sum_k a_k cos(pi k (f + 0.5) / F), a_k ~ N(0, 1/(1+k)).
Eigen::VectorXf SmoothCurve(int dim, double scale, Rng &rng) {
  Eigen::VectorXf curve = Eigen::VectorXf::Zero(dim);
  for (int k = 1; k <= kCurveOrder; k++) {
    const double a = scale * StandardNormal(rng) / std::sqrt(1.0 + k);
    for (int f = 0; f < dim; f++)
      curve[f] += a * std::cos(M_PI * k * (f + 0.5) / dim);
  }
  return curve;
}

}  // namespace

std::vector<TrainingUtterance> SyntheticCorpus::CleanDomain() const {
  std::vector<TrainingUtterance> out;
  for (size_t i : train_clean)
    out.push_back({utterances[i].id, {utterances[i].clean}});
  return out;
}

std::vector<TrainingUtterance> SyntheticCorpus::DegradedDomain() const {
  std::vector<TrainingUtterance> out;
  for (size_t i : train_degraded)
    out.push_back({utterances[i].id, {utterances[i].degraded}});
  return out;
}

SyntheticCorpus MakeSyntheticCorpus(const SyntheticTaskOptions &opts,
                                    uint64_t seed) {
  const int dim = opts.feature_dim;
  Rng rng(MixSeed(seed, "synthetic-task"));
  std::vector<Eigen::VectorXf> phones, speakers;
  for (int p = 0; p < opts.num_phones; p++)
    phones.push_back(SmoothCurve(dim, opts.phone_scale, rng));
  for (int s = 0; s < opts.num_speakers; s++)
    speakers.push_back(SmoothCurve(dim, opts.speaker_scale, rng));

  SyntheticCorpus corpus;
  for (int s = 0; s < opts.num_speakers; s++) {
    for (int u = 0; u < opts.utts_per_speaker; u++) {
      SyntheticUtterance utt;
      utt.id = "spk" + std::to_string(s) + "-utt" + std::to_string(u);
      utt.speaker = s;
      const int frames = opts.frames_per_utt;
      Eigen::MatrixXf raw(dim, frames);
      int t = 0;
      while (t < frames) {
        const Eigen::VectorXf &ph = phones[UniformIndex(rng, phones.size())];
        const int len = 4 + static_cast<int>(UniformIndex(rng, 12));
        for (int j = 0; j < len && t < frames; j++, t++) raw.col(t) = ph;
      }
      // Three-tap smoothing blurs the phone boundaries.
      Eigen::MatrixXf smooth(dim, frames);
      for (int j = 0; j < frames; j++) {
        const int a = std::max(j - 1, 0), b = std::min(j + 1, frames - 1);
        smooth.col(j) = 0.25f * raw.col(a) + 0.5f * raw.col(j) +
                        0.25f * raw.col(b);
      }
      utt.clean = smooth.colwise() + speakers[s];
      corpus.utterances.push_back(std::move(utt));
      if (u < opts.train_per_domain)
        corpus.train_clean.push_back(corpus.utterances.size() - 1);
      else if (u < 2 * opts.train_per_domain)
        corpus.train_degraded.push_back(corpus.utterances.size() - 1);
      else
        corpus.held_out.push_back(corpus.utterances.size() - 1);
    }
  }

  double sum = 0, sum_sq = 0, n = 0;
  for (const auto &u : corpus.utterances) {
    sum += u.clean.sum();
    sum_sq += u.clean.squaredNorm();
    n += u.clean.size();
  }
  corpus.clean_std = std::sqrt(sum_sq / n - (sum / n) * (sum / n));

  // Structured offset: a spectral tilt plus a bump, shifted to be
  // non-negative (degradations add energy) and scaled so that its spread
  // across bins is offset_scale * std.
  Eigen::VectorXf offset(dim);
  for (int f = 0; f < dim; f++) {
    const double x = (f + 0.5) / dim;
    offset[f] = 1.5 * x + std::exp(-std::pow((x - 0.3) / 0.1, 2));
  }
  offset.array() -= offset.minCoeff();
  const double spread = std::sqrt(
      (offset.array() - offset.mean()).square().sum() / dim);
  offset *= opts.offset_scale * corpus.clean_std / spread;
  corpus.offset = offset;

  const double noise_std = opts.noise_ratio * corpus.clean_std;
  for (auto &u : corpus.utterances) {
    u.degraded = u.clean.colwise() + offset;
    for (Eigen::Index i = 0; i < u.degraded.size(); i++)
      u.degraded.data()[i] += noise_std * StandardNormal(rng);
  }
  return corpus;
}

FeatureMatrix AsLogMel(const Eigen::MatrixXf &values) {
  FeatureMatrix m;
  m.values = values;
  m.kind = FeatureKind::kLogMelFbank;
  return m;
}

}  // namespace testing
}  // namespace uen
