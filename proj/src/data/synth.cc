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

#include "siamts/data/synth.h"

#include <cmath>
#include <numbers>

#include "siamts/common/error.h"

namespace siamts::data {
namespace {

struct UserSignature {
  std::vector<double> frequency;               // [component]
  std::vector<std::vector<double>> phase;      // [component][channel]
  std::vector<std::vector<double>> amplitude;  // [component][channel]
};

}  // namespace

std::vector<SessionRecording> synth_generate(const SynthParams& p, Rng& rng) {
  if (p.n_users == 0 || p.sessions_per_user == 0 || p.session_length == 0 ||
      p.channels == 0 || p.components == 0) {
    throw ConfigError("synth: all counts must be >= 1");
  }
  if (!(p.min_frequency > 0.0 && p.max_frequency >= p.min_frequency)) {
    throw ConfigError("synth: need 0 < min_frequency <= max_frequency");
  }
  std::uniform_real_distribution<double> freq(p.min_frequency, p.max_frequency);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> amp(0.5, 1.5);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<UserSignature> users(p.n_users);
  for (auto& u : users) {
    for (std::size_t k = 0; k < p.components; ++k) {
      u.frequency.push_back(freq(rng));
      std::vector<double> ph, am;
      for (std::size_t c = 0; c < p.channels; ++c) {
        ph.push_back(phase(rng));
        am.push_back(amp(rng));
      }
      u.phase.push_back(std::move(ph));
      u.amplitude.push_back(std::move(am));
    }
  }

  std::vector<SessionRecording> out;
  for (std::size_t ui = 0; ui < p.n_users; ++ui) {
    const UserSignature& u = users[ui];
    for (std::size_t s = 0; s < p.sessions_per_user; ++s) {
      SessionRecording rec;
      rec.user_id = static_cast<int>(ui);
      rec.session_id = static_cast<int>(s);
      rec.sample_rate = p.sample_rate;
      rec.samples =
          numerics::Tensor(numerics::Shape{p.session_length, p.channels}, 0.0);

      std::vector<double> gain(p.channels);
      for (double& g : gain) g = 1.0 + p.session_gain_jitter * normal(rng);
      std::vector<double> f(p.components);
      for (std::size_t k = 0; k < p.components; ++k) {
        f[k] = u.frequency[k] * (1.0 + p.frequency_jitter * normal(rng));
      }
      const double start = std::uniform_real_distribution<double>(
          0.0, 1.0 / p.min_frequency)(rng);

      for (std::size_t t = 0; t < p.session_length; ++t) {
        const double time = start + static_cast<double>(t);
        for (std::size_t c = 0; c < p.channels; ++c) {
          double v = 0.0;
          for (std::size_t k = 0; k < p.components; ++k) {
            v += u.amplitude[k][c] *
                 std::sin(2.0 * std::numbers::pi * f[k] * time + u.phase[k][c]);
          }
          rec.samples.at(t, c) =
              gain[c] * v + p.noise_std * normal(rng) + p.offset;
        }
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<SessionRecording> synth_generate(std::size_t n_users,
                                             std::size_t sessions_per_user,
                                             std::size_t session_length,
                                             std::size_t channels, Rng& rng) {
  SynthParams p;
  p.n_users = n_users;
  p.sessions_per_user = sessions_per_user;
  p.session_length = session_length;
  p.channels = channels;
  return synth_generate(p, rng);
}

}  // namespace siamts::data
