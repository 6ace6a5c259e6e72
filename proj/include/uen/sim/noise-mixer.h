// uen/sim/noise-mixer.h

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

#ifndef UEN_SIM_NOISE_MIXER_H_
#define UEN_SIM_NOISE_MIXER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "uen/dsp/feature-types.h"

namespace uen {

double Rms(const Eigen::VectorXf &x);

struct MixInfo {
  int64_t noise_offset = 0;
  double gain = 0;
};

/**
   Adds noise to speech at snr_db, SNR being the ratio of full-utterance
   RMS values.  The noise is read cyclically from a random start chosen by
   seed until it covers the speech, then scaled by
   g = rms(speech) / rms(segment) * 10^(-snr_db / 20).
   Throws InputError on a rate mismatch, empty noise or a silent segment.
*/
Waveform MixNoise(const Waveform &speech, const Waveform &noise,
                  double snr_db, uint64_t seed, MixInfo *info = nullptr);

// Procedural noise classes used in place of recorded noise collections.
enum class NoiseClass { kWhite, kPink, kTones, kBabble };

const char *NoiseClassName(NoiseClass c);
// Throws ConfigError for an unknown name.
NoiseClass ParseNoiseClass(const std::string &name);
std::vector<NoiseClass> AllNoiseClasses();

/**
   duration_s of noise with unit RMS:
     white   Gaussian
     pink    Gaussian shaped to a 1/f power spectrum
     tones   one to three sinusoids with slow amplitude modulation
     babble  six overlapping voiced "talkers": glottal pulse trains with
             drifting pitch through two resonances, gated by a syllable-rate
             envelope
*/
Waveform MakeNoise(NoiseClass c, double duration_s, uint64_t seed,
                   int sample_rate_hz = kSampleRateHz);

}  // namespace uen

#endif  // UEN_SIM_NOISE_MIXER_H_
