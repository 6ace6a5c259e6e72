// src/dsp/feature-functions.cc

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

#include "uen/dsp/feature-functions.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "uen/base/errors.h"

namespace uen {

const char *FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kLogMelFbank: return "log_mel_fb";
    case FeatureKind::kMfcc: return "mfcc";
  }
  return "unknown";
}

int FrameOptions::FrameLength(int sample_rate_hz) const {
  return static_cast<int>(std::lround(frame_length_s * sample_rate_hz));
}

int FrameOptions::FrameShift(int sample_rate_hz) const {
  return static_cast<int>(std::lround(frame_shift_s * sample_rate_hz));
}

int64_t FrameOptions::NumFrames(int64_t num_samples,
                                int sample_rate_hz) const {
  const int len = FrameLength(sample_rate_hz);
  const int shift = FrameShift(sample_rate_hz);
  if (num_samples < len) return 0;
  return 1 + (num_samples - len) / shift;
}

double MelScale(double freq_hz) {
  return 2595.0 * std::log10(1.0 + freq_hz / 700.0);
}

double InverseMelScale(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> MelBinCenters(const MelOptions &opts) {
  const double lo = MelScale(opts.low_freq_hz);
  const double hi = MelScale(opts.high_freq_hz);
  const double delta = (hi - lo) / (opts.num_bins + 1);
  std::vector<double> centers(opts.num_bins);
  for (int b = 0; b < opts.num_bins; b++)
    centers[b] = InverseMelScale(lo + (b + 1) * delta);
  return centers;
}

namespace {

void CheckRate(const Waveform &wav) {
  if (wav.sample_rate_hz != kSampleRateHz)
    UEN_THROW(InputError, "expected ", kSampleRateHz, " Hz audio, got ",
              wav.sample_rate_hz, " Hz");
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// num_bins x (fft_size/2 + 1) triangular weights on the mel axis.
Eigen::MatrixXd MelBanks(const MelOptions &opts, int fft_size,
                         int sample_rate_hz) {
  const int num_fft_bins = fft_size / 2 + 1;
  const double lo = MelScale(opts.low_freq_hz);
  const double hi = MelScale(opts.high_freq_hz);
  const double delta = (hi - lo) / (opts.num_bins + 1);
  Eigen::MatrixXd banks = Eigen::MatrixXd::Zero(opts.num_bins, num_fft_bins);
  for (int b = 0; b < opts.num_bins; b++) {
    const double left = lo + b * delta, center = left + delta,
                 right = center + delta;
    for (int k = 0; k < num_fft_bins; k++) {
      const double mel =
          MelScale(static_cast<double>(k) * sample_rate_hz / fft_size);
      if (mel > left && mel <= center)
        banks(b, k) = (mel - left) / (center - left);
      else if (mel > center && mel < right)
        banks(b, k) = (right - mel) / (right - center);
    }
  }
  return banks;
}

}  // namespace

FeatureMatrix LogMelFbank(const Waveform &wav, const FrameOptions &frame_opts,
                          const MelOptions &mel_opts) {
  CheckRate(wav);
  const int rate = wav.sample_rate_hz;
  const int64_t num_frames = frame_opts.NumFrames(wav.samples.size(), rate);
  if (num_frames < 1)
    UEN_THROW(InputError, "waveform of ", wav.samples.size(),
              " samples is shorter than one frame");
  const int frame_len = frame_opts.FrameLength(rate);
  const int shift = frame_opts.FrameShift(rate);
  const int fft_size = NextPowerOfTwo(frame_len);
  const Eigen::MatrixXd banks = MelBanks(mel_opts, fft_size, rate);

  Eigen::VectorXd window(frame_len);
  for (int i = 0; i < frame_len; i++)
    window[i] = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (frame_len - 1));

  Eigen::FFT<double> fft;
  std::vector<double> frame(fft_size, 0.0);
  std::vector<std::complex<double>> spectrum;
  Eigen::VectorXd power(fft_size / 2 + 1);

  FeatureMatrix out;
  out.kind = FeatureKind::kLogMelFbank;
  out.frame_shift_s = static_cast<float>(frame_opts.frame_shift_s);
  out.values.resize(mel_opts.num_bins, num_frames);
  for (int64_t t = 0; t < num_frames; t++) {
    const float *src = wav.samples.data() + t * shift;
    for (int i = 0; i < frame_len; i++) frame[i] = src[i] * window[i];
    fft.fwd(spectrum, frame);
    for (int k = 0; k <= fft_size / 2; k++) power[k] = std::norm(spectrum[k]);
    const Eigen::VectorXd energies = banks * power;
    out.values.col(t) =
        energies.cwiseMax(mel_opts.energy_floor).array().log().cast<float>();
  }
  return out;
}

FeatureMatrix Stmc(const FeatureMatrix &feat, double window_s) {
  const int64_t num_frames = feat.num_frames();
  const int64_t window = std::max<int64_t>(
      1, std::lround(window_s / static_cast<double>(feat.frame_shift_s)));
  FeatureMatrix out = feat;
  for (int64_t t = 0; t < num_frames; t++) {
    int64_t begin = 0, end = num_frames;
    if (num_frames > window) {
      begin = std::clamp<int64_t>(t - window / 2, 0, num_frames - window);
      end = begin + window;
    }
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(feat.num_dims());
    for (int64_t j = begin; j < end; j++)
      sum += feat.values.col(j).cast<double>();
    const Eigen::VectorXd mean = sum / static_cast<double>(end - begin);
    out.values.col(t) =
        (feat.values.col(t).cast<double>() - mean).cast<float>();
  }
  return out;
}

std::vector<bool> EnergyVad(const Waveform &wav, const FrameOptions &frame_opts,
                            double vad_offset, double energy_floor) {
  CheckRate(wav);
  const int rate = wav.sample_rate_hz;
  const int64_t num_frames = frame_opts.NumFrames(wav.samples.size(), rate);
  const int frame_len = frame_opts.FrameLength(rate);
  const int shift = frame_opts.FrameShift(rate);
  std::vector<double> log_energy(num_frames);
  double mean = 0.0;
  for (int64_t t = 0; t < num_frames; t++) {
    const double e =
        wav.samples.segment(t * shift, frame_len).cast<double>().squaredNorm();
    log_energy[t] = std::log(std::max(e, energy_floor));
    mean += log_energy[t];
  }
  std::vector<bool> mask(num_frames, false);
  if (num_frames == 0) return mask;
  mean /= static_cast<double>(num_frames);
  for (int64_t t = 0; t < num_frames; t++)
    mask[t] = log_energy[t] > mean + vad_offset;
  return mask;
}

FeatureMatrix SelectVoicedFrames(const FeatureMatrix &feat,
                                 const std::vector<bool> &mask) {
  if (static_cast<int64_t>(mask.size()) != feat.num_frames())
    UEN_THROW(DimensionError, "VAD mask has ", mask.size(),
              " entries for ", feat.num_frames(), " frames");
  int64_t kept = 0;
  for (bool v : mask) kept += v;
  FeatureMatrix out;
  out.kind = feat.kind;
  out.frame_shift_s = feat.frame_shift_s;
  out.values.resize(feat.num_dims(), kept);
  int64_t j = 0;
  for (int64_t t = 0; t < feat.num_frames(); t++)
    if (mask[t]) out.values.col(j++) = feat.values.col(t);
  return out;
}

Eigen::MatrixXf DctMatrix(int num_ceps, int dim) {
  Eigen::MatrixXd d(num_ceps, dim);
  for (int k = 0; k < num_ceps; k++) {
    const double scale = k == 0 ? std::sqrt(1.0 / dim) : std::sqrt(2.0 / dim);
    for (int n = 0; n < dim; n++)
      d(k, n) = scale * std::cos(M_PI * k * (n + 0.5) / dim);
  }
  return d.cast<float>();
}

FeatureMatrix DctToMfcc(const FeatureMatrix &feat, int num_ceps) {
  if (feat.kind != FeatureKind::kLogMelFbank)
    UEN_THROW(InputError, "DCT expects log mel filterbank input, got ",
              FeatureKindName(feat.kind));
  if (num_ceps < 1 || num_ceps > feat.num_dims())
    UEN_THROW(InputError, "num_ceps ", num_ceps, " must be in [1, ",
              feat.num_dims(), "]");
  FeatureMatrix out;
  out.kind = FeatureKind::kMfcc;
  out.frame_shift_s = feat.frame_shift_s;
  out.vad_mask = feat.vad_mask;
  out.values.noalias() =
      DctMatrix(num_ceps, static_cast<int>(feat.num_dims())) * feat.values;
  return out;
}

}  // namespace uen
