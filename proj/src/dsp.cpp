// src/dsp.cpp

// Copyright 2026  The embedsep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "embedsep/dsp.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace embedsep {

void validate(const StftConfig& cfg) {
  if (cfg.sample_rate <= 0.0)
    throw InvalidInputError("stft config: sample_rate must be positive");
  if (cfg.frame_len <= 0)
    throw InvalidInputError("stft config: frame_len must be positive");
  if (cfg.frame_len % 2 != 0)
    throw InvalidInputError("stft config: frame_len must be even");
  if (cfg.hop <= 0 || cfg.hop > cfg.frame_len)
    throw InvalidInputError("stft config: need 0 < hop <= frame_len");
}

Index stft_frame_count(Index num_samples, const StftConfig& cfg) {
  if (num_samples < cfg.frame_len) return 0;
  return 1 + (num_samples - cfg.frame_len) / cfg.hop;
}

VectorXd hann_window(Index n) {
  VectorXd w(n);
  for (Index i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n));
  return w;
}

Spectrogram stft(const Waveform& w, const StftConfig& cfg) {
  validate(cfg);
  if (w.sample_rate != cfg.sample_rate)
    throw InvalidInputError("stft: waveform sample rate does not match config");
  if (w.size() < cfg.frame_len)
    throw InvalidInputError("stft: signal shorter than one frame");
  if (!w.samples.allFinite())
    throw InvalidInputError("stft: non-finite samples");

  const Index frames = stft_frame_count(w.size(), cfg);
  const Index bins = cfg.frame_len / 2 + 1;
  const VectorXd win = hann_window(cfg.frame_len);

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);

  Spectrogram out;
  out.config = cfg;
  out.values.resize(frames, bins);

  std::vector<double> frame(cfg.frame_len);
  std::vector<std::complex<double>> spec(bins);
  for (Index t = 0; t < frames; ++t) {
    for (Index i = 0; i < cfg.frame_len; ++i)
      frame[i] = w.samples[t * cfg.hop + i] * win[i];
    fft.fwd(spec, frame);
    for (Index f = 0; f < bins; ++f) out.values(t, f) = spec[f];
  }
  return out;
}

Waveform istft(const Spectrogram& s) {
  validate(s.config);
  if (s.frames() < 1) throw InvalidInputError("istft: spectrogram has no frames");
  if (s.bins() != s.config.frame_len / 2 + 1)
    throw InvalidInputError("istft: bin count inconsistent with config");

  const Index n = s.config.frame_len;
  const Index hop = s.config.hop;
  const Index frames = s.frames();
  const Index out_len = (frames - 1) * hop + n;
  const VectorXd win = hann_window(n);

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);

  VectorXd acc = VectorXd::Zero(out_len);
  VectorXd norm = VectorXd::Zero(out_len);

  std::vector<std::complex<double>> spec(s.bins());
  std::vector<double> frame(n);
  for (Index t = 0; t < frames; ++t) {
    for (Index f = 0; f < s.bins(); ++f) spec[f] = s.values(t, f);
    fft.inv(frame, spec);
    for (Index i = 0; i < n; ++i) {
      acc[t * hop + i] += win[i] * frame[i];
      norm[t * hop + i] += win[i] * win[i];
    }
  }

  // Squared-window normalization; edge samples where window coverage is
  // tiny are left as accumulated (first/last hop of a Hann frame).
  const double eps = 1e-12;
  Waveform out;
  out.sample_rate = s.config.sample_rate;
  out.samples = acc.array() / norm.array().max(eps);
  return out;
}

MatrixXd log_magnitude(const Spectrogram& s) {
  const MatrixXd mag = s.magnitude();
  double floor = kLogFloorRatio * mag.maxCoeff();
  if (floor <= 0.0) floor = std::numeric_limits<double>::min();
  return mag.array().max(floor).log();
}

Spectrogram apply_mask(const Spectrogram& s, const MatrixXd& mask) {
  if (mask.rows() != s.frames() || mask.cols() != s.bins())
    throw InvalidInputError("apply_mask: mask shape does not match spectrogram");
  Spectrogram out;
  out.config = s.config;
  out.values = s.values.cwiseProduct(mask.cast<std::complex<double>>());
  return out;
}

}  // namespace embedsep
