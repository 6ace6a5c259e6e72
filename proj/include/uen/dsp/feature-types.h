// uen/dsp/feature-types.h

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

#ifndef UEN_DSP_FEATURE_TYPES_H_
#define UEN_DSP_FEATURE_TYPES_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace uen {

constexpr int kSampleRateHz = 16000;
constexpr int kNumMelBins = 40;

struct Waveform {
  Eigen::VectorXf samples;
  int sample_rate_hz = kSampleRateHz;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

enum class FeatureKind : uint32_t { kLogMelFbank = 0, kMfcc = 1 };

const char *FeatureKindName(FeatureKind kind);

// F x T: one column per frame.
struct FeatureMatrix {
  Eigen::MatrixXf values;
  FeatureKind kind = FeatureKind::kLogMelFbank;
  float frame_shift_s = 0.010f;
  std::optional<std::vector<bool>> vad_mask;

  int64_t num_dims() const { return values.rows(); }
  int64_t num_frames() const { return values.cols(); }
};

}  // namespace uen

#endif  // UEN_DSP_FEATURE_TYPES_H_
