// uen/dsp/wave-io.h

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

#ifndef UEN_DSP_WAVE_IO_H_
#define UEN_DSP_WAVE_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "uen/dsp/feature-types.h"

namespace uen {

// 16-bit PCM mono RIFF/WAVE.  Samples are scaled to [-1, 1).  Reading
// throws FormatError for anything else and InputError for a sample rate
// other than 16 kHz.
Waveform ReadWave(std::istream &is);
Waveform ReadWaveFile(const std::string &path);

// Samples are clipped to [-1, 1] and rounded to the nearest 16-bit value.
void WriteWave(const Waveform &wav, std::ostream &os);
void WriteWaveFile(const Waveform &wav, const std::string &path);

}  // namespace uen

#endif  // UEN_DSP_WAVE_IO_H_
