// include/embedsep/dsp.hpp

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

#ifndef EMBEDSEP_DSP_HPP_
#define EMBEDSEP_DSP_HPP_

#include "embedsep/error.hpp"
#include "embedsep/types.hpp"

namespace embedsep {

// Analysis/synthesis configuration. 256 samples at 8 kHz is a 32 ms frame,
// the hop of 64 samples an 8 ms frame advance. The window is the periodic
// Hann window; with hop = frame_len/4 the squared-window overlap-add is
// constant, so weighted overlap-add resynthesis is exact on the interior.
struct StftConfig {
  double sample_rate = 8000.0;
  Index frame_len = 256;
  Index hop = 64;

  bool operator==(const StftConfig&) const = default;
};

void validate(const StftConfig& cfg);

struct Waveform {
  VectorXd samples;
  double sample_rate = 8000.0;

  Index size() const { return samples.size(); }
};

// Log-magnitude floor, relative to the largest magnitude in the spectrogram.
inline constexpr double kLogFloorRatio = 1e-7;

struct Spectrogram {
  MatrixXcd values;  // frames x bins, bins = frame_len/2 + 1
  StftConfig config;

  Index frames() const { return values.rows(); }
  Index bins() const { return values.cols(); }

  MatrixXd magnitude() const { return values.cwiseAbs(); }
};

// Frames fully covered by the input; trailing partial frames are dropped.
Index stft_frame_count(Index num_samples, const StftConfig& cfg);

// Periodic Hann window of length n.
VectorXd hann_window(Index n);

Spectrogram stft(const Waveform& w, const StftConfig& cfg);

// Weighted overlap-add synthesis. istft(stft(w)) reproduces w on the
// fully-overlapped interior; output length is (frames-1)*hop + frame_len.
Waveform istft(const Spectrogram& s);

// Elementwise log(max(|X|, floor)), floor = kLogFloorRatio * max |X|.
MatrixXd log_magnitude(const Spectrogram& s);

// Elementwise real-valued mask on the complex spectrogram.
Spectrogram apply_mask(const Spectrogram& s, const MatrixXd& mask);

}  // namespace embedsep

#endif  // EMBEDSEP_DSP_HPP_
