// uen/dsp/feature-functions.h

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

#ifndef UEN_DSP_FEATURE_FUNCTIONS_H_
#define UEN_DSP_FEATURE_FUNCTIONS_H_

#include <vector>

#include "uen/dsp/feature-types.h"

namespace uen {

struct FrameOptions {
  double frame_length_s = 0.025;
  double frame_shift_s = 0.010;

  int FrameLength(int sample_rate_hz) const;
  int FrameShift(int sample_rate_hz) const;
  // 1 + floor((num_samples - frame_length) / frame_shift), or 0 if the
  // signal is shorter than one frame.
  int64_t NumFrames(int64_t num_samples, int sample_rate_hz) const;
};

struct MelOptions {
  int num_bins = kNumMelBins;
  double low_freq_hz = 20.0;
  double high_freq_hz = 7600.0;
  double energy_floor = 1e-10;
};

// HTK mel scale.
double MelScale(double freq_hz);
double InverseMelScale(double mel);

// Center frequency (Hz) of each triangular filter.
std::vector<double> MelBinCenters(const MelOptions &opts);

/**
   Log mel filterbank energies.  Each frame is Hamming-windowed (no
   pre-emphasis, no dither), zero-padded to the next power of two and
   transformed; the power spectrum is weighted by triangular filters that
   are linear on the mel axis between low_freq_hz and high_freq_hz, and
   each energy is floored at energy_floor before the log.

   Throws InputError if the rate is not 16 kHz or the waveform is shorter
   than one frame.
*/
FeatureMatrix LogMelFbank(const Waveform &wav,
                          const FrameOptions &frame_opts = {},
                          const MelOptions &mel_opts = {});

// Short-time mean centering with a window of window_s seconds centered on
// each frame.  Near the edges the window slides inward to stay inside the
// utterance (it never shrinks unless the utterance itself is shorter), so
// utterances no longer than the window get plain global mean subtraction.
FeatureMatrix Stmc(const FeatureMatrix &feat, double window_s = 3.0);

// Frame t is speech iff log(frame energy) > mean over frames + offset.
// Frames align with LogMelFbank.
std::vector<bool> EnergyVad(const Waveform &wav,
                            const FrameOptions &frame_opts = {},
                            double vad_offset = 0.69314718055994531,
                            double energy_floor = 1e-10);

// Removes columns whose mask entry is false.
FeatureMatrix SelectVoicedFrames(const FeatureMatrix &feat,
                                 const std::vector<bool> &mask);

// Orthonormal DCT-II over the feature dimension keeping num_ceps
// coefficients.  Requires kind == kLogMelFbank and num_ceps <= F.
FeatureMatrix DctToMfcc(const FeatureMatrix &feat, int num_ceps = kNumMelBins);

// The num_ceps x dim orthonormal DCT-II matrix.
Eigen::MatrixXf DctMatrix(int num_ceps, int dim);

}  // namespace uen

#endif  // UEN_DSP_FEATURE_FUNCTIONS_H_
