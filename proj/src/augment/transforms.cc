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

#include "siamts/augment/transforms.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "siamts/augment/spline.h"
#include "siamts/common/error.h"

namespace siamts::augment {
namespace {

constexpr std::array<std::pair<AugmentationKind, std::string_view>, 10>
    kNames = {{
        {AugmentationKind::kJitter, "jitter"},
        {AugmentationKind::kRandomScaling, "random_scaling"},
        {AugmentationKind::kMagnitudeWarp, "magnitude_warp"},
        {AugmentationKind::kTimeWarp, "time_warp"},
        {AugmentationKind::kFlip, "flip"},
        {AugmentationKind::kDrop, "drop"},
        {AugmentationKind::kRandomSampling, "random_sampling"},
        {AugmentationKind::kPermutation, "permutation"},
        {AugmentationKind::kNegation, "negation"},
        {AugmentationKind::kChannelShuffle, "channel_shuffle"},
    }};

// Minimum local speed of the time-warp path; keeps phi strictly monotone.
constexpr double kMinWarpSpeed = 1e-3;

double standard_normal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

void require(bool ok, const char* op, const std::string& what) {
  if (!ok) throw ConfigError(std::string(op) + ": " + what);
}

}  // namespace

std::string_view to_string(AugmentationKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

AugmentationKind parse_augmentation_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ConfigError("unknown augmentation '" + std::string(name) + "'");
}

const std::vector<AugmentationKind>& all_augmentation_kinds() {
  static const std::vector<AugmentationKind> kinds = [] {
    std::vector<AugmentationKind> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

AugmentationSpec AugmentationSpec::defaults(AugmentationKind kind) {
  AugmentationSpec spec;
  spec.kind = kind;
  switch (kind) {
    case AugmentationKind::kJitter:
      spec.sigma = std::sqrt(0.8);
      break;
    case AugmentationKind::kRandomScaling:
      spec.mu = 1.0;
      spec.sigma = std::sqrt(0.65);
      break;
    case AugmentationKind::kMagnitudeWarp:
    case AugmentationKind::kTimeWarp:
      spec.knots = 4;
      spec.sigma = 0.2;
      break;
    case AugmentationKind::kDrop:
      spec.fraction = 0.1;
      break;
    case AugmentationKind::kRandomSampling:
      spec.fraction = 0.5;
      break;
    case AugmentationKind::kPermutation:
      spec.segments = 4;
      break;
    default:
      break;
  }
  return spec;
}

void AugmentationSpec::validate() const {
  const std::string name(to_string(kind));
  switch (kind) {
    case AugmentationKind::kJitter:
    case AugmentationKind::kRandomScaling:
      require(sigma >= 0.0, name.c_str(), "sigma must be >= 0");
      break;
    case AugmentationKind::kMagnitudeWarp:
    case AugmentationKind::kTimeWarp:
      require(knots >= 2, name.c_str(), "needs at least 2 knots");
      require(sigma >= 0.0, name.c_str(), "sigma must be >= 0");
      break;
    case AugmentationKind::kDrop:
      require(fraction >= 0.0 && fraction <= 1.0, name.c_str(),
              "fraction must lie in [0, 1]");
      break;
    case AugmentationKind::kRandomSampling:
      require(fraction > 0.0 && fraction <= 1.0, name.c_str(),
              "keep fraction must lie in (0, 1]");
      break;
    case AugmentationKind::kPermutation:
      require(segments >= 2, name.c_str(), "needs at least 2 segments");
      break;
    default:
      break;
  }
}

Window jitter(const Window& x, double sigma, Rng& rng) {
  require(sigma >= 0.0, "jitter", "sigma must be >= 0");
  Window out = x;
  for (double& v : out.values.data()) v += sigma * standard_normal(rng);
  return out;
}

Window random_scaling(const Window& x, double mu, double sigma, Rng& rng) {
  require(sigma >= 0.0, "random_scaling", "sigma must be >= 0");
  Window out = x;
  const std::size_t steps = x.steps(), channels = x.channels();
  for (std::size_t c = 0; c < channels; ++c) {
    const double s = mu + sigma * standard_normal(rng);
    for (std::size_t t = 0; t < steps; ++t) out.at(t, c) *= s;
  }
  return out;
}

Window apply_magnitude_warp(const Window& x,
                            const std::vector<std::vector<double>>& controls) {
  const std::size_t steps = x.steps(), channels = x.channels();
  if (controls.size() != channels) {
    throw ConfigError("magnitude_warp: need one control vector per channel");
  }
  Window out = x;
  for (std::size_t c = 0; c < channels; ++c) {
    const CubicSpline curve(
        uniform_knots(controls[c].size(), static_cast<double>(steps - 1)),
        controls[c]);
    for (std::size_t t = 0; t < steps; ++t) {
      out.at(t, c) *= curve(static_cast<double>(t));
    }
  }
  return out;
}

Window magnitude_warp(const Window& x, int knots, double sigma, Rng& rng) {
  require(knots >= 2, "magnitude_warp", "needs at least 2 knots");
  require(x.steps() >= 2, "magnitude_warp", "needs at least 2 time steps");
  std::vector<std::vector<double>> controls(x.channels());
  for (auto& knot_values : controls) {
    knot_values.resize(static_cast<std::size_t>(knots));
    for (double& v : knot_values) v = 1.0 + sigma * standard_normal(rng);
  }
  return apply_magnitude_warp(x, controls);
}

std::vector<double> time_warp_path(std::size_t steps,
                                   const std::vector<double>& speed_controls) {
  if (steps < 2) throw ConfigError("time_warp: needs at least 2 time steps");
  const double last = static_cast<double>(steps - 1);
  const CubicSpline speed(uniform_knots(speed_controls.size(), last),
                          speed_controls);
  std::vector<double> cumulative(steps, 0.0);
  for (std::size_t t = 1; t < steps; ++t) {
    const double v = speed(static_cast<double>(t) - 0.5);
    cumulative[t] = cumulative[t - 1] + std::max(v, kMinWarpSpeed);
  }
  const double total = cumulative.back();
  std::vector<double> path(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    path[t] = last * cumulative[t] / total;
  }
  path.back() = last;
  return path;
}

Window resample(const Window& x, const std::vector<double>& path) {
  const std::size_t steps = x.steps(), channels = x.channels();
  Window out = x;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const double pos =
        std::clamp(path[t], 0.0, static_cast<double>(steps - 1));
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= steps) lo = steps - 2;
    const double frac = pos - static_cast<double>(lo);
    for (std::size_t c = 0; c < channels; ++c) {
      out.at(t, c) = frac == 0.0 ? x.at(lo, c)
                                 : x.at(lo, c) * (1.0 - frac) +
                                       x.at(lo + 1, c) * frac;
    }
  }
  return out;
}

Window time_warp(const Window& x, int knots, double sigma, Rng& rng) {
  require(knots >= 2, "time_warp", "needs at least 2 knots");
  std::vector<double> controls(static_cast<std::size_t>(knots));
  for (double& v : controls) v = 1.0 + sigma * standard_normal(rng);
  return resample(x, time_warp_path(x.steps(), controls));
}

Window flip(const Window& x) {
  Window out = x;
  const std::size_t steps = x.steps(), channels = x.channels();
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t c = 0; c < channels; ++c) {
      out.at(t, c) = x.at(steps - 1 - t, c);
    }
  }
  return out;
}

Window zero_segment(const Window& x, std::size_t offset, std::size_t length) {
  Window out = x;
  const std::size_t end = std::min(offset + length, x.steps());
  for (std::size_t t = offset; t < end; ++t) {
    for (std::size_t c = 0; c < x.channels(); ++c) out.at(t, c) = 0.0;
  }
  return out;
}

Window drop(const Window& x, double fraction, Rng& rng) {
  require(fraction >= 0.0 && fraction <= 1.0, "drop",
          "fraction must lie in [0, 1]");
  const std::size_t steps = x.steps();
  const auto length = static_cast<std::size_t>(
      std::lround(fraction * static_cast<double>(steps)));
  std::uniform_int_distribution<std::size_t> offset(0, steps - length);
  return zero_segment(x, offset(rng), length);
}

Window interpolate_from(const Window& x, const std::vector<std::size_t>& kept) {
  const std::size_t steps = x.steps(), channels = x.channels();
  if (kept.size() < 2 || kept.front() != 0 || kept.back() != steps - 1) {
    throw ConfigError(
        "random_sampling: kept indices must start at 0 and end at T-1");
  }
  Window out = x;
  for (std::size_t j = 0; j + 1 < kept.size(); ++j) {
    const std::size_t t0 = kept[j], t1 = kept[j + 1];
    const double span = static_cast<double>(t1 - t0);
    for (std::size_t t = t0 + 1; t < t1; ++t) {
      const double offset = static_cast<double>(t - t0);
      for (std::size_t c = 0; c < channels; ++c) {
        const double a = x.at(t0, c), b = x.at(t1, c);
        out.at(t, c) = a + (b - a) * offset / span;
      }
    }
  }
  return out;
}

Window random_sampling(const Window& x, double keep_fraction, Rng& rng) {
  require(keep_fraction > 0.0 && keep_fraction <= 1.0, "random_sampling",
          "keep fraction must lie in (0, 1]");
  const std::size_t steps = x.steps();
  const auto keep = static_cast<std::size_t>(
      std::ceil(keep_fraction * static_cast<double>(steps) - 1e-9));
  require(keep >= 2, "random_sampling", "must keep at least 2 time steps");
  std::vector<std::size_t> interior(steps - 2);
  std::iota(interior.begin(), interior.end(), std::size_t{1});
  std::shuffle(interior.begin(), interior.end(), rng);
  std::vector<std::size_t> kept(interior.begin(),
                                interior.begin() + static_cast<long>(keep - 2));
  kept.push_back(0);
  kept.push_back(steps - 1);
  std::sort(kept.begin(), kept.end());
  return interpolate_from(x, kept);
}

std::vector<std::size_t> segment_bounds(std::size_t steps, int segments) {
  const auto n = static_cast<std::size_t>(segments);
  std::vector<std::size_t> starts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) starts[i] = i * steps / n;
  return starts;
}

Window apply_segment_order(const Window& x, int segments,
                           const std::vector<std::size_t>& order) {
  const std::vector<std::size_t> bounds = segment_bounds(x.steps(), segments);
  Window out = x;
  std::size_t row = 0;
  for (std::size_t s : order) {
    for (std::size_t t = bounds[s]; t < bounds[s + 1]; ++t, ++row) {
      for (std::size_t c = 0; c < x.channels(); ++c) {
        out.at(row, c) = x.at(t, c);
      }
    }
  }
  return out;
}

Window permutation(const Window& x, int segments, Rng& rng) {
  require(segments >= 2 && static_cast<std::size_t>(segments) <= x.steps(),
          "permutation", "segments must lie in [2, T]");
  std::vector<std::size_t> order(static_cast<std::size_t>(segments));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return apply_segment_order(x, segments, order);
}

Window negation(const Window& x) {
  Window out = x;
  for (double& v : out.values.data()) v = -v;
  return out;
}

Window apply_channel_permutation(const Window& x,
                                 const std::vector<std::size_t>& perm) {
  if (perm.size() != x.channels()) {
    throw ConfigError("channel_shuffle: permutation length differs from C");
  }
  Window out = x;
  for (std::size_t t = 0; t < x.steps(); ++t) {
    for (std::size_t c = 0; c < perm.size(); ++c) {
      out.at(t, c) = x.at(t, perm[c]);
    }
  }
  return out;
}

Window channel_shuffle(const Window& x, Rng& rng) {
  require(x.channels() >= 2, "channel_shuffle", "needs at least 2 channels");
  std::vector<std::size_t> perm(x.channels());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return apply_channel_permutation(x, perm);
}

Window apply(const AugmentationSpec& spec, const Window& x, Rng& rng) {
  switch (spec.kind) {
    case AugmentationKind::kJitter:
      return jitter(x, spec.sigma, rng);
    case AugmentationKind::kRandomScaling:
      return random_scaling(x, spec.mu, spec.sigma, rng);
    case AugmentationKind::kMagnitudeWarp:
      return magnitude_warp(x, spec.knots, spec.sigma, rng);
    case AugmentationKind::kTimeWarp:
      return time_warp(x, spec.knots, spec.sigma, rng);
    case AugmentationKind::kFlip:
      return flip(x);
    case AugmentationKind::kDrop:
      return drop(x, spec.fraction, rng);
    case AugmentationKind::kRandomSampling:
      return random_sampling(x, spec.fraction, rng);
    case AugmentationKind::kPermutation:
      return permutation(x, spec.segments, rng);
    case AugmentationKind::kNegation:
      return negation(x);
    case AugmentationKind::kChannelShuffle:
      return channel_shuffle(x, rng);
  }
  throw ConfigError("apply: unhandled augmentation kind");
}

std::pair<Window, Window> sample_positive_pair(
    const Window& x, const std::vector<AugmentationSpec>& specs, Rng& rng,
    PairComposition composition) {
  if (specs.empty()) {
    throw ConfigError("sample_positive_pair: augmentation list is empty");
  }
  auto view = [&] {
    if (composition == PairComposition::kPickOne) {
      std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
      return apply(specs[pick(rng)], x, rng);
    }
    Window out = x;
    for (const AugmentationSpec& spec : specs) out = apply(spec, out, rng);
    return out;
  };
  Window first = view();
  Window second = view();
  return {std::move(first), std::move(second)};
}

std::pair<Window, int> mtssl_example(const Window& x,
                                     const AugmentationSpec& spec,
                                     bool apply_transform, Rng& rng) {
  if (!apply_transform) return {x, 0};
  return {apply(spec, x, rng), 1};
}

std::pair<Window, int> mtssl_example(const Window& x,
                                     const AugmentationSpec& spec, Rng& rng) {
  const bool coin = std::bernoulli_distribution(0.5)(rng);
  return mtssl_example(x, spec, coin, rng);
}

std::vector<AugmentationSpec> musicid_pair_recipe() {
  return {AugmentationSpec::defaults(AugmentationKind::kRandomScaling),
          AugmentationSpec::defaults(AugmentationKind::kJitter)};
}

std::vector<AugmentationSpec> mmi_pair_recipe() {
  return {AugmentationSpec::defaults(AugmentationKind::kRandomScaling),
          AugmentationSpec::defaults(AugmentationKind::kFlip)};
}

std::vector<AugmentationSpec> musicid_mtssl_recipe() {
  std::vector<AugmentationSpec> specs;
  for (AugmentationKind kind : all_augmentation_kinds()) {
    specs.push_back(AugmentationSpec::defaults(kind));
  }
  return specs;
}

std::vector<AugmentationSpec> mmi_mtssl_recipe() {
  return {AugmentationSpec::defaults(AugmentationKind::kRandomScaling),
          AugmentationSpec::defaults(AugmentationKind::kMagnitudeWarp),
          AugmentationSpec::defaults(AugmentationKind::kTimeWarp),
          AugmentationSpec::defaults(AugmentationKind::kNegation)};
}

}  // namespace siamts::augment
