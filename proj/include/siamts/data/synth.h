// Copyright 2026 The SiamTS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIAMTS_DATA_SYNTH_H_
#define SIAMTS_DATA_SYNTH_H_

#include <vector>

#include "siamts/common/random.h"
#include "siamts/data/corpus.h"

namespace siamts::data {

// Multi-user sinusoid corpus. Every user owns `components` sinusoids whose
// frequencies, per-channel phases and per-channel amplitudes are drawn once.
// Every session rescales each channel by (1 + session_gain_jitter * N(0,1)),
// shifts the recording start, scales each frequency by
// (1 + frequency_jitter * N(0,1)), and adds white noise.
struct SynthParams {
  std::size_t n_users = 10;
  std::size_t sessions_per_user = 8;
  std::size_t session_length = 150;
  std::size_t channels = 8;
  std::size_t components = 3;
  // Frequencies in cycles per sample.
  double min_frequency = 0.02;
  double max_frequency = 0.25;
  double noise_std = 0.5;
  double session_gain_jitter = 0.2;
  double frequency_jitter = 0.0;
  // Constant added to every sample; large enough, it makes the corpus
  // strictly positive.
  double offset = 0.0;
  double sample_rate = 64.0;
};

std::vector<SessionRecording> synth_generate(const SynthParams& params,
                                             Rng& rng);

// Shorthand for the default generator with the given geometry.
std::vector<SessionRecording> synth_generate(std::size_t n_users,
                                             std::size_t sessions_per_user,
                                             std::size_t session_length,
                                             std::size_t channels, Rng& rng);

}  // namespace siamts::data

#endif  // SIAMTS_DATA_SYNTH_H_
