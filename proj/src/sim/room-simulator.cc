// src/sim/room-simulator.cc

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

#include "uen/sim/room-simulator.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "uen/base/errors.h"
#include "uen/base/random.h"

namespace uen {

double RoomSpec::Volume() const {
  return dimensions_m[0] * dimensions_m[1] * dimensions_m[2];
}

double RoomSpec::SurfaceArea() const {
  const auto &d = dimensions_m;
  return 2.0 * (d[0] * d[1] + d[0] * d[2] + d[1] * d[2]);
}

void RoomSpec::Validate() const {
  double dist2 = 0;
  for (int i = 0; i < 3; i++) {
    if (!(dimensions_m[i] > 0))
      UEN_THROW(InputError, "room dimension ", i, " is ", dimensions_m[i]);
    for (double p : {source_pos_m[i], mic_pos_m[i]})
      if (!(p > 0 && p < dimensions_m[i]))
        UEN_THROW(InputError, "position coordinate ", p,
                  " is not strictly inside [0, ", dimensions_m[i], "]");
    dist2 += std::pow(source_pos_m[i] - mic_pos_m[i], 2);
  }
  if (dist2 == 0) UEN_THROW(InputError, "source and microphone coincide");
  if (!(target_rt60_s >= 0))
    UEN_THROW(InputError, "negative target RT60 ", target_rt60_s);
}

double SabineAbsorption(const RoomSpec &room) {
  if (!(room.target_rt60_s > 0))
    UEN_THROW(InputError, "Sabine absorption needs a positive RT60");
  const double alpha =
      0.161 * room.Volume() / (room.SurfaceArea() * room.target_rt60_s);
  if (alpha > 1.0)
    UEN_THROW(InputError, "RT60 ", room.target_rt60_s,
              " s is infeasible for a ", room.Volume(),
              " m^3 room (absorption ", alpha, " > 1)");
  return alpha;
}

namespace {

// T20 of the decay an image lattice produces when every reflection removes
// a fraction 1 - exp(-1) of the energy.  An image at distance r in
// direction u has undergone about r * sum_i |u_i| / L_i reflections, so the
// energy arriving at time t averages exp(-c t g(u)) over directions and the
// Schroeder integral is the average of exp(-c t g) / g.  Scaling the loss
// by a scales the result by 1 / a.
double LatticeT20PerUnitLoss(const RoomSpec &room) {
  const auto &L = room.dimensions_m;
  const int kDirections = 4096;
  std::vector<double> g(kDirections);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < kDirections; k++) {
    const double z = 1.0 - (k + 0.5) / kDirections;  // upper hemisphere
    const double rho = std::sqrt(1.0 - z * z);
    const double phi = golden * k;
    g[k] = std::abs(rho * std::cos(phi)) / L[0] +
           std::abs(rho * std::sin(phi)) / L[1] + std::abs(z) / L[2];
  }
  auto edc_db = [&](double t) {
    double sum = 0, sum0 = 0;
    for (double gk : g) {
      sum += std::exp(-kSpeedOfSound * t * gk) / gk;
      sum0 += 1.0 / gk;
    }
    return 10.0 * std::log10(sum / sum0);
  };
  // Locate the -5 and -25 dB crossings, then fit a line between them.
  auto crossing = [&](double level) {
    double lo = 0, hi = 1e-3;
    while (edc_db(hi) > level) hi *= 2;
    for (int it = 0; it < 60; it++) {
      const double mid = 0.5 * (lo + hi);
      (edc_db(mid) > level ? lo : hi) = mid;
    }
    return hi;
  };
  const double t0 = crossing(-5.0), t1 = crossing(-25.0);
  const int kPoints = 200;
  double st = 0, sd = 0, stt = 0, std_ = 0;
  for (int i = 0; i < kPoints; i++) {
    const double t = t0 + (t1 - t0) * i / (kPoints - 1);
    const double db = edc_db(t);
    st += t;
    sd += db;
    stt += t * t;
    std_ += t * db;
  }
  const double slope =
      (kPoints * std_ - st * sd) / (kPoints * stt - st * st);
  return -60.0 / slope;
}

}  // namespace

double ReflectionEnergyLoss(const RoomSpec &room) {
  SabineAbsorption(room);  // feasibility
  return LatticeT20PerUnitLoss(room) / room.target_rt60_s;
}

Rir GenerateRir(const RoomSpec &room, uint64_t seed, int sample_rate_hz,
                double jitter_m) {
  room.Validate();
  const auto &L = room.dimensions_m;
  const auto &src = room.source_pos_m;
  const auto &mic = room.mic_pos_m;
  const double fs = sample_rate_hz;
  double d0 = 0;
  for (int i = 0; i < 3; i++) d0 += std::pow(src[i] - mic[i], 2);
  d0 = std::sqrt(d0);
  const int64_t direct = std::lround(d0 / kSpeedOfSound * fs);

  Rir rir;
  rir.sample_rate_hz = sample_rate_hz;
  if (room.target_rt60_s == 0) {
    rir.samples = Eigen::VectorXf::Zero(direct + 1);
    rir.samples[direct] = 1.0f;
    return rir;
  }
  const double log_beta = -0.5 * ReflectionEnergyLoss(room);
  const int64_t length =
      direct + static_cast<int64_t>(std::ceil(room.target_rt60_s * fs)) + 1;
  const double max_dist = static_cast<double>(length) / fs * kSpeedOfSound;

  Rng rng(seed);
  std::vector<double> h(length, 0.0);
  int n_max[3];
  for (int i = 0; i < 3; i++)
    n_max[i] = static_cast<int>(std::ceil(max_dist / (2 * L[i]))) + 1;

  for (int nx = -n_max[0]; nx <= n_max[0]; nx++) {
    for (int ux = 0; ux < 2; ux++) {
      const double px = (1 - 2 * ux) * src[0] + 2 * nx * L[0] - mic[0];
      if (std::abs(px) > max_dist + jitter_m) continue;
      const int rx = std::abs(nx - ux) + std::abs(nx);
      for (int ny = -n_max[1]; ny <= n_max[1]; ny++) {
        for (int uy = 0; uy < 2; uy++) {
          const double py = (1 - 2 * uy) * src[1] + 2 * ny * L[1] - mic[1];
          if (px * px + py * py > std::pow(max_dist + 2 * jitter_m, 2))
            continue;
          const int ry = std::abs(ny - uy) + std::abs(ny);
          for (int nz = -n_max[2]; nz <= n_max[2]; nz++) {
            for (int uz = 0; uz < 2; uz++) {
              const double pz =
                  (1 - 2 * uz) * src[2] + 2 * nz * L[2] - mic[2];
              const int rz = std::abs(nz - uz) + std::abs(nz);
              const int reflections = rx + ry + rz;
              double x = px, y = py, z = pz;
              if (reflections > 0 && jitter_m > 0) {
                x += UniformRange(rng, -jitter_m, jitter_m);
                y += UniformRange(rng, -jitter_m, jitter_m);
                z += UniformRange(rng, -jitter_m, jitter_m);
              }
              const double dist = std::sqrt(x * x + y * y + z * z);
              const int64_t idx = std::lround(dist / kSpeedOfSound * fs);
              if (idx >= length) continue;
              h[idx] += std::exp(reflections * log_beta) * d0 / dist;
            }
          }
        }
      }
    }
  }
  // Positive image amplitudes pile up into a slowly varying offset once the
  // tail gets dense; remove it with a 2nd order Butterworth high-pass.
  {
    const double w = std::tan(M_PI * kRirHighPassHz / fs);
    const double k = 1.0 / (1.0 + std::sqrt(2.0) * w + w * w);
    const double b0 = k, b1 = -2.0 * k, b2 = k;
    const double a1 = 2.0 * (w * w - 1.0) * k;
    const double a2 = (1.0 - std::sqrt(2.0) * w + w * w) * k;
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    for (double &v : h) {
      const double y = b0 * v + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
      x2 = x1;
      x1 = v;
      y2 = y1;
      y1 = y;
      v = y;
    }
    const double peak = std::abs(h[direct]);
    if (peak > 0)
      for (double &v : h) v /= peak;
  }
  rir.samples = Eigen::Map<Eigen::VectorXd>(h.data(), length).cast<float>();
  rir.measured_rt60_s = SchroederRt60(rir.samples, sample_rate_hz);
  return rir;
}

double SchroederRt60(const Eigen::VectorXf &rir, int sample_rate_hz) {
  const int64_t n = rir.size();
  std::vector<double> edc(n + 1, 0.0);
  for (int64_t i = n - 1; i >= 0; i--)
    edc[i] = edc[i + 1] + static_cast<double>(rir[i]) * rir[i];
  if (n == 0 || edc[0] <= 0) return 0.0;

  auto fit = [&](double hi_db, double lo_db) -> double {
    // Least-squares slope (dB per second) over the samples with the curve
    // between hi_db and lo_db, from the first crossing of hi_db to the
    // first crossing of lo_db.
    int64_t begin = -1, end = -1;
    for (int64_t i = 0; i < n; i++) {
      const double db = edc[i] > 0 ? 10 * std::log10(edc[i] / edc[0])
                                   : -std::numeric_limits<double>::infinity();
      if (begin < 0 && db <= hi_db) begin = i;
      if (db < lo_db) {
        end = i;
        break;
      }
    }
    if (begin < 0 || end < 0 || end - begin < 2) return 0.0;
    double st = 0, sd = 0, stt = 0, std_ = 0;
    const double m = static_cast<double>(end - begin);
    for (int64_t i = begin; i < end; i++) {
      const double t = static_cast<double>(i) / sample_rate_hz;
      const double db = 10 * std::log10(edc[i] / edc[0]);
      st += t;
      sd += db;
      stt += t * t;
      std_ += t * db;
    }
    const double slope = (m * std_ - st * sd) / (m * stt - st * st);
    return slope < 0 ? -60.0 / slope : 0.0;
  };
  const double t20 = fit(-5.0, -25.0);
  return t20 > 0 ? t20 : fit(-5.0, -15.0);
}

Eigen::VectorXf ConvolveTruncated(const Eigen::VectorXf &x,
                                  const Eigen::VectorXf &h) {
  const int64_t n = x.size(), m = h.size();
  if (n == 0 || m == 0) return Eigen::VectorXf::Zero(n);
  const int64_t full = n + m - 1;
  int64_t size = 1;
  while (size < full) size <<= 1;
  std::vector<double> a(size, 0.0), b(size, 0.0);
  for (int64_t i = 0; i < n; i++) a[i] = x[i];
  for (int64_t i = 0; i < m; i++) b[i] = h[i];
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> fa, fb;
  fft.fwd(fa, a);
  fft.fwd(fb, b);
  for (size_t k = 0; k < fa.size(); k++) fa[k] *= fb[k];
  std::vector<double> y;
  fft.inv(y, fa);
  Eigen::VectorXf out(n);
  for (int64_t i = 0; i < n; i++) out[i] = static_cast<float>(y[i]);
  return out;
}

Waveform AddReverb(const Waveform &wav, const Rir &rir) {
  if (wav.sample_rate_hz != rir.sample_rate_hz)
    UEN_THROW(InputError, "waveform at ", wav.sample_rate_hz,
              " Hz but RIR at ", rir.sample_rate_hz, " Hz");
  Waveform out;
  out.sample_rate_hz = wav.sample_rate_hz;
  out.samples = ConvolveTruncated(wav.samples, rir.samples);
  const float peak = out.samples.size() ? out.samples.cwiseAbs().maxCoeff()
                                        : 0.0f;
  if (peak > 0.99f) out.samples *= 0.99f / peak;
  return out;
}

}  // namespace uen
