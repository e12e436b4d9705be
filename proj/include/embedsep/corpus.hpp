// include/embedsep/corpus.hpp

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

#ifndef EMBEDSEP_CORPUS_HPP_
#define EMBEDSEP_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embedsep/dsp.hpp"
#include "embedsep/rng.hpp"

namespace embedsep {

inline constexpr double kDefaultSilenceThresholdDb = 40.0;

struct MixtureSpec {
  std::vector<std::string> source_paths;  // >= 2
  std::string noise_path;                 // empty when clean
  double noise_level_db = 0.0;            // relative to per-speaker power
  std::uint64_t seed = 0;
  Index segment_frames = 100;

  bool has_noise() const { return !noise_path.empty(); }
};

// One training/evaluation item: the mixture plus everything it was mixed
// from, with spectrograms cached under one StftConfig.
struct MixtureSample {
  Waveform mixture;
  std::vector<Waveform> sources;  // post-gain
  Waveform noise;                 // post-gain; empty when !has_noise
  bool has_noise = false;
  std::vector<double> gains;  // per source
  double noise_gain = 0.0;

  Spectrogram mix_spec;
  std::vector<Spectrogram> source_specs;
  Spectrogram noise_spec;

  Index num_speakers() const { return static_cast<Index>(sources.size()); }
};

// Per-bin speaker dominance. y is K x C one-hot over speakers for every
// bin; bins where the noise signal wins the argmax instead have a zero y
// row and noise_dominated set. Silence is flagged separately.
struct DominanceLabels {
  MatrixXd y;                           // K x C
  std::vector<std::uint8_t> noise_dominated;  // K; empty when labels are speaker-only
  std::vector<std::uint8_t> silence;    // K
  Index active_count = 0;               // non-silent bins

  Index bins() const { return y.rows(); }
  Index num_speakers() const { return y.cols(); }
  bool has_noise_column() const { return !noise_dominated.empty(); }
};

struct IdealMasks {
  MatrixXd ibm;          // K x C one-hot over speakers
  VectorXd alpha_ideal;  // K in [0, 1]
};

// Scale each source to unit average power, the noise (if any) to
// 10^(noise_level_db/10) of that, truncate to the shortest signal and sum.
MixtureSample make_mixture(const MixtureSpec& spec, const StftConfig& cfg);

// Same construction from already-loaded waveforms (post-load, pre-gain).
MixtureSample mix_waveforms(std::vector<Waveform> sources, std::optional<Waveform> noise,
                            double noise_level_db, const StftConfig& cfg);

// Rebuild a sample from stored gains instead of re-normalizing; used when
// consuming a manifest, so the in-memory mixture matches the one written
// to disk up to PCM quantization of the raw signals.
struct ManifestRecord;
MixtureSample mixture_from_record(const ManifestRecord& rec, const std::string& base_dir,
                                  const StftConfig& cfg);

DominanceLabels dominance_labels(const MixtureSample& sample,
                                 double silence_threshold_db = kDefaultSilenceThresholdDb,
                                 bool include_noise_column = false);

// alpha_ideal[k] = sum_c |S_c[k]| / (sum_c |S_c[k]| + |N[k]|), 0/0 := 1.
VectorXd ideal_noise_mask(const MixtureSample& sample);

IdealMasks ideal_masks(const MixtureSample& sample,
                       double silence_threshold_db = kDefaultSilenceThresholdDb);

// Non-overlapping chunks of exactly segment_frames frames; the trailing
// remainder is dropped. Chunk i covers frames [i*segment_frames, ...).
struct SegmentRange {
  Index first_frame = 0;
  Index frames = 0;
};
std::vector<SegmentRange> segment(Index total_frames, Index segment_frames);

// ---------------------------------------------------------------------------
// Manifest: one mixture per line, tab-separated
//   mixture_path  src1_path  src2_path  [noise_path]  gain1  gain2  [gain_noise]
// Lines starting with '#' are comments. Paths are relative to the manifest.
// ---------------------------------------------------------------------------
struct ManifestRecord {
  std::string mixture_path;
  std::vector<std::string> source_paths;
  std::string noise_path;  // empty when clean
  std::vector<double> gains;
  double noise_gain = 0.0;

  bool has_noise() const { return !noise_path.empty(); }
  bool operator==(const ManifestRecord&) const = default;
};

std::vector<ManifestRecord> read_manifest(const std::string& path);
void write_manifest(const std::string& path, const std::vector<ManifestRecord>& records);

// ---------------------------------------------------------------------------
// Synthetic toy corpus: two "speaker classes" of amplitude-modulated
// harmonic complexes with disjoint fundamental ranges, plus optional
// low-pass filtered noise backgrounds. A desk-scale stand-in for real
// speech corpora.
// ---------------------------------------------------------------------------
struct ToyClassParams {
  double f0_min = 100.0;
  double f0_max = 150.0;
  double harmonic_decay_min = 0.7;
  double harmonic_decay_max = 1.4;
  double am_rate_min = 1.0;  // Hz
  double am_rate_max = 6.0;
  double am_depth_min = 0.3;
  double am_depth_max = 0.9;
  double band_limit_hz = 3500.0;
};

struct ToyCorpusConfig {
  Index n_mixtures = 100;
  ToyClassParams class_a{};                                   // 100-150 Hz
  ToyClassParams class_b{.f0_min = 220.0, .f0_max = 320.0};   // 220-320 Hz
  bool noise = false;
  double noise_level_db = 0.0;
  Index noise_reuse = 1;  // clean pairs repeated with fresh noise
  double noise_cutoff_min_hz = 300.0;
  double noise_cutoff_max_hz = 1800.0;
  double duration_min_s = 0.9;
  double duration_max_s = 1.3;
  double sample_rate = 8000.0;
  std::uint64_t seed = 0;
  std::string out_dir;
  Index threads = 1;
};

struct ToySynthSummary {
  Index n_written = 0;
  std::string manifest_path;
  bool pitch_ranges_overlap = false;
};

// Deterministic under (seed, mixture index); each mixture's RNG stream is
// independent so generation parallelizes without affecting the output.
ToySynthSummary synth_toy_corpus(const ToyCorpusConfig& cfg);

// Single toy utterance / noise segment (exposed for tests and `mix`).
Waveform synth_toy_utterance(const ToyClassParams& params, double duration_s,
                             double sample_rate, Rng& rng);
Waveform synth_toy_noise(double cutoff_hz, double duration_s, double sample_rate, Rng& rng);

double mean_power(const VectorXd& samples);

}  // namespace embedsep

#endif  // EMBEDSEP_CORPUS_HPP_
