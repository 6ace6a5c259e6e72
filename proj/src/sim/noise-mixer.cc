// src/sim/noise-mixer.cc

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

#include "uen/sim/noise-mixer.h"

#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "uen/base/errors.h"
#include "uen/base/random.h"

namespace uen {

double Rms(const Eigen::VectorXf &x) {
  if (x.size() == 0) return 0.0;
  return std::sqrt(x.cast<double>().squaredNorm() / x.size());
}

Waveform MixNoise(const Waveform &speech, const Waveform &noise,
                  double snr_db, uint64_t seed, MixInfo *info) {
  if (speech.sample_rate_hz != noise.sample_rate_hz)
    UEN_THROW(InputError, "speech at ", speech.sample_rate_hz,
              " Hz but noise at ", noise.sample_rate_hz, " Hz");
  const int64_t n = speech.samples.size(), m = noise.samples.size();
  if (m == 0) UEN_THROW(InputError, "empty noise signal");
  Rng rng(seed);
  const int64_t offset = static_cast<int64_t>(UniformIndex(rng, m));
  Eigen::VectorXf segment(n);
  for (int64_t i = 0; i < n; i++) segment[i] = noise.samples[(offset + i) % m];
  const double noise_rms = Rms(segment);
  if (n > 0 && noise_rms == 0)
    UEN_THROW(InputError, "noise segment is silent");
  const double gain =
      n > 0 ? Rms(speech.samples) / noise_rms * std::pow(10.0, -snr_db / 20)
            : 0.0;
  Waveform out;
  out.sample_rate_hz = speech.sample_rate_hz;
  out.samples = speech.samples + static_cast<float>(gain) * segment;
  if (info) {
    info->noise_offset = offset;
    info->gain = gain;
  }
  return out;
}

const char *NoiseClassName(NoiseClass c) {
  switch (c) {
    case NoiseClass::kWhite: return "white";
    case NoiseClass::kPink: return "pink";
    case NoiseClass::kTones: return "tones";
    case NoiseClass::kBabble: return "babble";
  }
  return "unknown";
}

NoiseClass ParseNoiseClass(const std::string &name) {
  for (NoiseClass c : AllNoiseClasses())
    if (name == NoiseClassName(c)) return c;
  UEN_THROW(ConfigError, "unknown noise class '", name, "'");
}

std::vector<NoiseClass> AllNoiseClasses() {
  return {NoiseClass::kWhite, NoiseClass::kPink, NoiseClass::kTones,
          NoiseClass::kBabble};
}

namespace {

Eigen::VectorXd WhiteNoise(int64_t n, Rng &rng) {
  Eigen::VectorXd x(n);
  for (int64_t i = 0; i < n; i++) x[i] = StandardNormal(rng);
  return x;
}

Eigen::VectorXd PinkNoise(int64_t n, Rng &rng) {
  int64_t size = 1;
  while (size < n) size <<= 1;
  std::vector<double> white(size);
  for (double &v : white) v = StandardNormal(rng);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, white);
  spec[0] = 0;
  for (size_t k = 1; k < spec.size(); k++) {
    const size_t f = std::min(k, spec.size() - k);
    spec[k] /= std::sqrt(static_cast<double>(f));
  }
  std::vector<double> pink;
  fft.inv(pink, spec);
  return Eigen::Map<Eigen::VectorXd>(pink.data(), n);
}

Eigen::VectorXd Tones(int64_t n, double fs, Rng &rng) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  const int count = 1 + static_cast<int>(UniformIndex(rng, 3));
  for (int c = 0; c < count; c++) {
    const double f = UniformRange(rng, 150.0, 3000.0);
    const double mod = UniformRange(rng, 0.5, 4.0);
    const double phase = UniformRange(rng, 0, 2 * M_PI);
    const double amp = UniformRange(rng, 0.5, 1.0);
    for (int64_t i = 0; i < n; i++) {
      const double t = i / fs;
      x[i] += amp * (0.6 + 0.4 * std::sin(2 * M_PI * mod * t)) *
              std::sin(2 * M_PI * f * t + phase);
    }
  }
  return x;
}

// Two-pole resonator applied in place.
void Resonate(Eigen::VectorXd *x, double freq, double bandwidth, double fs) {
  const double r = std::exp(-M_PI * bandwidth / fs);
  const double a1 = -2 * r * std::cos(2 * M_PI * freq / fs), a2 = r * r;
  double y1 = 0, y2 = 0;
  for (Eigen::Index i = 0; i < x->size(); i++) {
    const double y = (*x)[i] - a1 * y1 - a2 * y2;
    y2 = y1;
    y1 = y;
    (*x)[i] = y;
  }
}

Eigen::VectorXd Talker(int64_t n, double fs, Rng &rng) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  const double f0 = UniformRange(rng, 90.0, 240.0);
  const double drift = UniformRange(rng, 0.5, 2.0);
  double phase = UniformRange(rng, 0, 1);
  for (int64_t i = 0; i < n; i++) {
    const double t = i / fs;
    phase += f0 * (1 + 0.1 * std::sin(2 * M_PI * drift * t)) / fs;
    if (phase >= 1) {
      phase -= 1;
      x[i] = 1.0;
    }
  }
  Resonate(&x, UniformRange(rng, 300, 900), 120, fs);
  Resonate(&x, UniformRange(rng, 900, 2500), 200, fs);
  // Syllable-rate gating.
  const double rate = UniformRange(rng, 3.0, 6.0);
  const double offset = UniformRange(rng, 0, 1);
  for (int64_t i = 0; i < n; i++) {
    const double s = std::sin(M_PI * (rate * i / fs + offset));
    x[i] *= s * s;
  }
  return x;
}

}  // namespace

Waveform MakeNoise(NoiseClass c, double duration_s, uint64_t seed,
                   int sample_rate_hz) {
  const int64_t n = std::lround(duration_s * sample_rate_hz);
  if (n < 1) UEN_THROW(InputError, "noise duration ", duration_s, " s");
  Rng rng(seed);
  Eigen::VectorXd x;
  switch (c) {
    case NoiseClass::kWhite: x = WhiteNoise(n, rng); break;
    case NoiseClass::kPink: x = PinkNoise(n, rng); break;
    case NoiseClass::kTones: x = Tones(n, sample_rate_hz, rng); break;
    case NoiseClass::kBabble:
      x = Eigen::VectorXd::Zero(n);
      for (int k = 0; k < 6; k++) {
        Eigen::VectorXd talker = Talker(n, sample_rate_hz, rng);
        const double rms = std::sqrt(talker.squaredNorm() / n);
        if (rms > 0) x += talker / rms;
      }
      break;
  }
  const double rms = std::sqrt(x.squaredNorm() / n);
  Waveform out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples = (rms > 0 ? x / rms : x).cast<float>();
  return out;
}

}  // namespace uen
