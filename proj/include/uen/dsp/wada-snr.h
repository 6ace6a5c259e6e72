// uen/dsp/wada-snr.h

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

#ifndef UEN_DSP_WADA_SNR_H_
#define UEN_DSP_WADA_SNR_H_

#include "uen/dsp/feature-types.h"

namespace uen {

constexpr double kWadaMinDb = -20.0;
constexpr double kWadaMaxDb = 100.0;
constexpr int kWadaMinSamples = 1000;

// The amplitude-distribution statistic log(E|x|) - E[log|x|] of the
// peak-normalized waveform, with |x| floored at 1e-10.
double WadaStatistic(const Waveform &wav);

// Blind SNR estimate (dB) by waveform amplitude distribution analysis: the
// statistic is mapped through the tabulated curve for gamma-distributed
// speech (shape 0.4) in Gaussian noise and interpolated linearly between the
// 1 dB table points.  Results are clamped to [-20, 100] dB; an all-zero
// waveform returns -20.  Throws InputError for fewer than 1000 samples.
double WadaSnr(const Waveform &wav);

// Table lookup alone, for a precomputed statistic.
double WadaSnrFromStatistic(double statistic);

}  // namespace uen

#endif  // UEN_DSP_WADA_SNR_H_
