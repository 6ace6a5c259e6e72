// uen/sim/room-simulator.h

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

#ifndef UEN_SIM_ROOM_SIMULATOR_H_
#define UEN_SIM_ROOM_SIMULATOR_H_

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "uen/dsp/feature-types.h"

namespace uen {

constexpr double kSpeedOfSound = 343.0;
constexpr double kRirHighPassHz = 100.0;

struct RoomSpec {
  std::array<double, 3> dimensions_m = {5.0, 4.0, 3.0};
  std::array<double, 3> source_pos_m = {1.5, 1.5, 1.5};
  std::array<double, 3> mic_pos_m = {3.5, 2.5, 1.2};
  double target_rt60_s = 0.5;

  double Volume() const;
  double SurfaceArea() const;
  // Throws InputError for a degenerate room or a negative target_rt60_s.
  // Source and microphone must be distinct points strictly inside the room.
  void Validate() const;
};

struct Rir {
  Eigen::VectorXf samples;
  int sample_rate_hz = kSampleRateHz;
  double measured_rt60_s = 0;
};

// Uniform wall absorption from Sabine's formula,
// alpha = 0.161 V / (S * rt60).  Throws InputError if rt60 <= 0 or the
// result exceeds 1.
double SabineAbsorption(const RoomSpec &room);

// Energy lost per wall reflection, as -log of the reflected fraction, such
// that the image lattice of this room decays with a T20 equal to
// target_rt60_s.  A shoebox lattice is not a diffuse field: directions
// that meet few walls decay slowly and dominate the tail, so the value
// exceeds the Sabine absorption by a room-dependent factor.  Throws like
// SabineAbsorption().
double ReflectionEnergyLoss(const RoomSpec &room);

/**
   Image-source room impulse response.  Each wall reflection scales the
   energy by exp(-ReflectionEnergyLoss(room)); images are placed on the nearest
   sample and their positions are jittered by up to jitter_m per axis using
   seed (the direct path is never moved).  The response runs for
   target_rt60_s past the direct path, is high-passed at kRirHighPassHz and
   scaled so that the direct-path tap equals 1.  target_rt60_s == 0 gives a single unit tap at the direct
   delay.  Throws InputError for an invalid room or infeasible RT60.
*/
Rir GenerateRir(const RoomSpec &room, uint64_t seed,
                int sample_rate_hz = kSampleRateHz, double jitter_m = 0.05);

// T20 estimate: a least-squares line through the Schroeder energy decay
// curve between -5 and -25 dB, extrapolated to -60 dB.  Falls back to the
// -5 to -15 dB span if the curve never reaches -25 dB, and returns 0 if it
// never reaches -15 dB.
double SchroederRt60(const Eigen::VectorXf &rir, int sample_rate_hz);

// Full linear convolution of x and h, truncated to x.size() samples.
Eigen::VectorXf ConvolveTruncated(const Eigen::VectorXf &x,
                                  const Eigen::VectorXf &h);

// Reverberates wav with rir, keeps the original length and scales the
// result down to a peak of 0.99 if it would otherwise exceed that.  Throws
// InputError if the sample rates differ.
Waveform AddReverb(const Waveform &wav, const Rir &rir);

}  // namespace uen

#endif  // UEN_SIM_ROOM_SIMULATOR_H_
