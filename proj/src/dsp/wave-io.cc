// src/dsp/wave-io.cc

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

#include "uen/dsp/wave-io.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "uen/base/binary-io.h"
#include "uen/base/errors.h"

namespace uen {

namespace {

constexpr float kPcmScale = 32768.0f;

}  // namespace

Waveform ReadWave(std::istream &is) {
  char riff[4], wave[4];
  ReadExact(is, riff, 4);
  ReadLe<uint32_t>(is);  // RIFF size, not trusted
  ReadExact(is, wave, 4);
  if (std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(wave, "WAVE", 4) != 0)
    UEN_THROW(FormatError, "not a RIFF/WAVE stream");

  bool have_fmt = false;
  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t rate = 0;
  while (true) {
    char id[4];
    ReadExact(is, id, 4);
    const uint32_t size = ReadLe<uint32_t>(is);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) UEN_THROW(FormatError, "fmt chunk too short");
      format = ReadLe<uint16_t>(is);
      channels = ReadLe<uint16_t>(is);
      rate = ReadLe<uint32_t>(is);
      ReadLe<uint32_t>(is);  // byte rate
      ReadLe<uint16_t>(is);  // block align
      bits = ReadLe<uint16_t>(is);
      is.ignore(size - 16 + (size & 1));
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt) UEN_THROW(FormatError, "data chunk before fmt chunk");
      if (format != 1 || bits != 16)
        UEN_THROW(FormatError, "only 16-bit PCM is supported (format ",
                  format, ", ", bits, " bits)");
      if (channels != 1)
        UEN_THROW(FormatError, "only mono audio is supported, got ",
                  channels, " channels");
      if (rate != static_cast<uint32_t>(kSampleRateHz))
        UEN_THROW(InputError, "sample rate ", rate, " Hz is not supported; ",
                  "expected ", kSampleRateHz, " Hz");
      if (size % 2 != 0) UEN_THROW(FormatError, "odd PCM data size");
      std::vector<int16_t> pcm(size / 2);
      ReadExact(is, reinterpret_cast<char *>(pcm.data()), size);
      Waveform wav;
      wav.sample_rate_hz = rate;
      wav.samples.resize(pcm.size());
      for (size_t i = 0; i < pcm.size(); i++)
        wav.samples[i] = pcm[i] / kPcmScale;
      return wav;
    } else {
      is.ignore(size + (size & 1));
      if (!is) UEN_THROW(FormatError, "truncated chunk in WAVE stream");
    }
  }
}

Waveform ReadWaveFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) UEN_THROW(InputError, "cannot open ", path);
  try {
    return ReadWave(is);
  } catch (const FormatError &e) {
    UEN_THROW(FormatError, path, ": ", e.what());
  }
}

void WriteWave(const Waveform &wav, std::ostream &os) {
  const uint32_t data_bytes = static_cast<uint32_t>(wav.samples.size() * 2);
  os.write("RIFF", 4);
  WriteLe<uint32_t>(os, 36 + data_bytes);
  os.write("WAVEfmt ", 8);
  WriteLe<uint32_t>(os, 16);
  WriteLe<uint16_t>(os, 1);
  WriteLe<uint16_t>(os, 1);
  WriteLe<uint32_t>(os, wav.sample_rate_hz);
  WriteLe<uint32_t>(os, wav.sample_rate_hz * 2);
  WriteLe<uint16_t>(os, 2);
  WriteLe<uint16_t>(os, 16);
  os.write("data", 4);
  WriteLe<uint32_t>(os, data_bytes);
  for (Eigen::Index i = 0; i < wav.samples.size(); i++) {
    const float v = std::clamp(wav.samples[i], -1.0f, 1.0f) * kPcmScale;
    WriteLe<int16_t>(os, static_cast<int16_t>(
        std::clamp(std::lround(v), -32768L, 32767L)));
  }
}

void WriteWaveFile(const Waveform &wav, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) UEN_THROW(InputError, "cannot write ", path);
  WriteWave(wav, os);
  if (!os) UEN_THROW(InputError, "error writing ", path);
}

}  // namespace uen
