// src/wav.cpp

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

#include "embedsep/wav.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace embedsep {

namespace {

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

Waveform decimate(const Waveform& w, Index factor) {
  if (factor < 1) throw InvalidInputError("decimate: factor must be >= 1");
  if (factor == 1) return w;

  // Linear-phase windowed-sinc low pass at 0.45 of the target Nyquist,
  // Blackman window, odd length so the group delay is an integer.
  const Index taps = 32 * factor + 1;
  const Index delay = (taps - 1) / 2;
  const double cutoff = 0.45 / static_cast<double>(factor);  // cycles per input sample
  VectorXd h(taps);
  for (Index j = 0; j < taps; ++j) {
    const double m = static_cast<double>(j - delay);
    const double sinc = (m == 0.0) ? 2.0 * cutoff : std::sin(2.0 * M_PI * cutoff * m) / (M_PI * m);
    const double x = static_cast<double>(j) / static_cast<double>(taps - 1);
    const double blackman = 0.42 - 0.5 * std::cos(2.0 * M_PI * x) + 0.08 * std::cos(4.0 * M_PI * x);
    h[j] = sinc * blackman;
  }
  h /= h.sum();  // unity DC gain

  const Index in_len = w.size();
  const Index out_len = in_len / factor;
  Waveform out;
  out.sample_rate = w.sample_rate / static_cast<double>(factor);
  out.samples.resize(out_len);
  for (Index i = 0; i < out_len; ++i) {
    const Index center = i * factor + delay;
    double acc = 0.0;
    for (Index j = 0; j < taps; ++j) {
      const Index n = center - j;
      if (n >= 0 && n < in_len) acc += h[j] * w.samples[n];
    }
    out.samples[i] = acc;
  }
  return out;
}

Waveform load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("wav: cannot open " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) throw ParseError("wav: missing RIFF header: " + path);
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) throw ParseError("wav: not a WAVE file: " + path);

  bool have_fmt = false;
  std::uint16_t channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::vector<std::int16_t> pcm;

  while (in.read(tag, 4)) {
    const std::uint32_t chunk_size = read_u32(in);
    if (!in) throw ParseError("wav: truncated chunk header: " + path);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw ParseError("wav: fmt chunk too small: " + path);
      const std::uint16_t format = read_u16(in);
      channels = read_u16(in);
      rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      in.ignore(chunk_size - 16 + (chunk_size % 2));
      if (format != 1) throw ParseError("wav: only PCM supported: " + path);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw ParseError("wav: data chunk before fmt: " + path);
      pcm.resize(chunk_size / 2);
      in.read(reinterpret_cast<char*>(pcm.data()), static_cast<std::streamsize>(pcm.size() * 2));
      if (!in) throw ParseError("wav: truncated data chunk: " + path);
      break;
    } else {
      in.ignore(chunk_size + (chunk_size % 2));
    }
  }
  if (!have_fmt) throw ParseError("wav: missing fmt chunk: " + path);
  if (pcm.empty() && !in) throw ParseError("wav: missing data chunk: " + path);
  if (channels != 1) throw UnsupportedChannelsError("wav: only mono supported: " + path);
  if (bits != 16) throw ParseError("wav: only 16-bit PCM supported: " + path);
  if (rate == 0) throw ParseError("wav: zero sample rate: " + path);

  Waveform w;
  w.sample_rate = static_cast<double>(rate);
  w.samples.resize(static_cast<Index>(pcm.size()));
  for (Index i = 0; i < w.samples.size(); ++i)
    w.samples[i] = static_cast<double>(pcm[static_cast<size_t>(i)]) / 32768.0;

  const auto target = static_cast<std::uint32_t>(kPipelineSampleRate);
  if (rate == target) return w;
  if (rate % target != 0)
    throw UnsupportedRateError("wav: rate " + std::to_string(rate) +
                               " is not an integer multiple of 8000: " + path);
  return decimate(w, static_cast<Index>(rate / target));
}

void save_wav(const std::string& path, const Waveform& w) {
  if (w.sample_rate <= 0) throw InvalidInputError("save_wav: bad sample rate");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_wav: cannot open " + path);

  const auto n = static_cast<std::uint32_t>(w.size());
  out.write("RIFF", 4);
  write_u32(out, 36 + 2 * n);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  const auto rate = static_cast<std::uint32_t>(w.sample_rate);
  write_u32(out, rate);
  write_u32(out, rate * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, 2 * n);
  for (Index i = 0; i < w.size(); ++i) {
    const double x = std::min(1.0, std::max(-1.0, w.samples[i]));
    const auto q = static_cast<std::int16_t>(std::lrint(x * 32767.0));
    write_u16(out, static_cast<std::uint16_t>(q));
  }
  if (!out) throw Error("save_wav: write failed: " + path);
}

}  // namespace embedsep
