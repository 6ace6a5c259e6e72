// tests/dsp-io-test.cc

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

#include <cstring>
#include <sstream>

#include <gtest/gtest.h>

#include "uen/base/binary-io.h"
#include "uen/base/errors.h"
#include "uen/base/random.h"
#include "uen/dsp/feature-io.h"
#include "uen/dsp/wave-io.h"

namespace uen {
namespace {

Waveform RandomWave(int n, Rng &rng) {
  Waveform wav;
  wav.samples.resize(n);
  for (int i = 0; i < n; i++)
    wav.samples[i] =
        static_cast<int>(UniformIndex(rng, 65536)) / 32768.0f - 1.0f;
  return wav;
}

TEST(WaveIoTest, RoundTripIsExactOnPcmGrid) {
  Rng rng(1);
  const Waveform wav = RandomWave(1234, rng);
  std::stringstream ss;
  WriteWave(wav, ss);
  EXPECT_EQ(ss.str().size(), 44u + 2 * 1234);
  const Waveform back = ReadWave(ss);
  EXPECT_EQ(back.sample_rate_hz, 16000);
  ASSERT_EQ(back.samples.size(), wav.samples.size());
  EXPECT_TRUE((back.samples.array() == wav.samples.array()).all());
}

TEST(WaveIoTest, ClipsOutOfRangeSamples) {
  Waveform wav;
  wav.samples = Eigen::VectorXf(3);
  wav.samples << 2.0f, -2.0f, 0.0f;
  std::stringstream ss;
  WriteWave(wav, ss);
  const Waveform back = ReadWave(ss);
  EXPECT_FLOAT_EQ(back.samples[0], 32767 / 32768.0f);
  EXPECT_FLOAT_EQ(back.samples[1], -1.0f);
}

std::string Header(uint16_t channels, uint32_t rate, uint16_t bits,
                   uint32_t data_bytes) {
  std::ostringstream os;
  os.write("RIFF", 4);
  WriteLe<uint32_t>(os, 36 + data_bytes);
  os.write("WAVEfmt ", 8);
  WriteLe<uint32_t>(os, 16);
  WriteLe<uint16_t>(os, 1);
  WriteLe<uint16_t>(os, channels);
  WriteLe<uint32_t>(os, rate);
  WriteLe<uint32_t>(os, rate * channels * bits / 8);
  WriteLe<uint16_t>(os, channels * bits / 8);
  WriteLe<uint16_t>(os, bits);
  os.write("data", 4);
  WriteLe<uint32_t>(os, data_bytes);
  return os.str();
}

TEST(WaveIoTest, RejectsUnsupportedFormats) {
  {
    std::istringstream is(Header(1, 8000, 16, 4) + std::string(4, '\0'));
    EXPECT_THROW(ReadWave(is), InputError);
  }
  {
    std::istringstream is(Header(2, 16000, 16, 4) + std::string(4, '\0'));
    EXPECT_THROW(ReadWave(is), FormatError);
  }
  {
    std::istringstream is(Header(1, 16000, 8, 4) + std::string(4, '\0'));
    EXPECT_THROW(ReadWave(is), FormatError);
  }
  {
    std::istringstream is(Header(1, 16000, 16, 8) + std::string(4, '\0'));
    EXPECT_THROW(ReadWave(is), FormatError);
  }
  {
    std::istringstream is("RIFX0000WAVE");
    EXPECT_THROW(ReadWave(is), FormatError);
  }
}

TEST(WaveIoTest, SkipsUnknownChunks) {
  std::string h = Header(1, 16000, 16, 2);
  std::ostringstream extra;
  extra.write("LIST", 4);
  WriteLe<uint32_t>(extra, 3);
  extra.write("abc\0", 4);  // odd size is padded
  h.insert(36, extra.str());
  std::istringstream is(h + std::string("\x00\x40", 2));
  const Waveform wav = ReadWave(is);
  ASSERT_EQ(wav.samples.size(), 1);
  EXPECT_FLOAT_EQ(wav.samples[0], 0.5f);
}

TEST(FeatureIoTest, RoundTripIsBitExact) {
  Rng rng(2);
  FeatureMatrix f;
  f.kind = FeatureKind::kMfcc;
  f.frame_shift_s = 0.01f;
  f.values.resize(40, 17);
  for (Eigen::Index i = 0; i < f.values.size(); i++)
    f.values.data()[i] = static_cast<float>(StandardNormal(rng));
  std::stringstream ss;
  WriteFeatures(f, ss);
  EXPECT_EQ(ss.str().substr(0, 8), "UENFEAT1");
  EXPECT_EQ(ss.str().size(), 8u + 16 + 4 * 40 * 17);
  const FeatureMatrix back = ReadFeatures(ss);
  EXPECT_EQ(back.kind, f.kind);
  EXPECT_EQ(back.frame_shift_s, f.frame_shift_s);
  ASSERT_EQ(back.values.rows(), 40);
  EXPECT_EQ(std::memcmp(back.values.data(), f.values.data(),
                        sizeof(float) * f.values.size()), 0);
}

TEST(FeatureIoTest, RowMajorPayload) {
  FeatureMatrix f;
  f.values = Eigen::MatrixXf(2, 2);
  f.values << 1, 2, 3, 4;
  std::stringstream ss;
  WriteFeatures(f, ss);
  const std::string s = ss.str();
  float second;
  std::memcpy(&second, s.data() + 24 + 4, 4);
  EXPECT_EQ(second, 2.0f);
}

TEST(FeatureIoTest, DetectsCorruption) {
  FeatureMatrix f;
  f.values = Eigen::MatrixXf::Ones(3, 3);
  std::stringstream ss;
  WriteFeatures(f, ss);
  const std::string good = ss.str();
  {
    std::istringstream is(good.substr(0, good.size() - 1));
    EXPECT_THROW(ReadFeatures(is), FormatError);
  }
  {
    std::istringstream is("UENFEAT2" + good.substr(8));
    EXPECT_THROW(ReadFeatures(is), FormatError);
  }
  {
    std::istringstream is(good + "x");
    EXPECT_THROW(ReadFeatures(is), FormatError);
  }
}

}  // namespace
}  // namespace uen
