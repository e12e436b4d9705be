// include/embedsep/wav.hpp

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

#ifndef EMBEDSEP_WAV_HPP_
#define EMBEDSEP_WAV_HPP_

#include <string>

#include "embedsep/dsp.hpp"

namespace embedsep {

inline constexpr double kPipelineSampleRate = 8000.0;

// Reads a PCM 16-bit mono WAV. Samples are scaled to [-1, 1]. Files whose
// rate is an integer multiple of 8 kHz are low-pass filtered and decimated
// to 8 kHz; any other rate is rejected.
Waveform load_wav(const std::string& path);

// Writes PCM 16-bit little-endian mono at w.sample_rate, clamping to [-1, 1].
void save_wav(const std::string& path, const Waveform& w);

// Windowed-sinc anti-alias decimation by an integer factor.
Waveform decimate(const Waveform& w, Index factor);

}  // namespace embedsep

#endif  // EMBEDSEP_WAV_HPP_
