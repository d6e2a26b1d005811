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

#ifndef SIAMTS_AUGMENT_TRANSFORMS_H_
#define SIAMTS_AUGMENT_TRANSFORMS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "siamts/augment/window.h"
#include "siamts/common/random.h"

namespace siamts::augment {

enum class AugmentationKind {
  kJitter,
  kRandomScaling,
  kMagnitudeWarp,
  kTimeWarp,
  kFlip,
  kDrop,
  kRandomSampling,
  kPermutation,
  kNegation,
  kChannelShuffle,
};

std::string_view to_string(AugmentationKind kind);
// Accepts the snake_case names returned by to_string().
AugmentationKind parse_augmentation_kind(std::string_view name);
const std::vector<AugmentationKind>& all_augmentation_kinds();

// A named stochastic transform with its distribution parameters. Only the
// fields relevant to `kind` are read.
struct AugmentationSpec {
  AugmentationKind kind = AugmentationKind::kJitter;
  // Standard deviation: jitter noise, per-channel scale factors, and the
  // warp control values.
  double sigma = 0.0;
  // Mean of the per-channel scale factors.
  double mu = 1.0;
  int knots = 4;
  // Dropped fraction (drop) or kept fraction (random_sampling).
  double fraction = 0.1;
  int segments = 4;

  // Defaults for `kind`; jitter and scaling use the variances 0.8 and 0.65
  // tuned for the MusicID recordings.
  static AugmentationSpec defaults(AugmentationKind kind);
  // Throws ConfigError when a parameter lies outside its valid range.
  void validate() const;
};

// Table of transforms, in declaration order of AugmentationKind.
Window jitter(const Window& x, double sigma, Rng& rng);
Window random_scaling(const Window& x, double mu, double sigma, Rng& rng);
Window magnitude_warp(const Window& x, int knots, double sigma, Rng& rng);
Window time_warp(const Window& x, int knots, double sigma, Rng& rng);
Window flip(const Window& x);
Window drop(const Window& x, double fraction, Rng& rng);
Window random_sampling(const Window& x, double keep_fraction, Rng& rng);
Window permutation(const Window& x, int segments, Rng& rng);
Window negation(const Window& x);
Window channel_shuffle(const Window& x, Rng& rng);

// Deterministic cores of the stochastic transforms above.

// Scales channel c by the natural cubic spline through `controls[c]`, whose
// knots sit uniformly over [0, T-1].
Window apply_magnitude_warp(const Window& x,
                            const std::vector<std::vector<double>>& controls);
// The monotone time remap phi with phi(0) = 0 and phi(T-1) = T-1 built from
// spline speed controls.
std::vector<double> time_warp_path(std::size_t steps,
                                   const std::vector<double>& speed_controls);
// Linear interpolation of every channel at the fractional positions `path`.
Window resample(const Window& x, const std::vector<double>& path);
// Keeps rows `kept` (sorted, first 0, last T-1) and linearly interpolates
// the rest.
Window interpolate_from(const Window& x, const std::vector<std::size_t>& kept);
// Start offsets of `segments` contiguous near-equal slices of [0, steps).
std::vector<std::size_t> segment_bounds(std::size_t steps, int segments);
// Concatenates the slices in `order`.
Window apply_segment_order(const Window& x, int segments,
                           const std::vector<std::size_t>& order);
// Column c of the output is column perm[c] of x.
Window apply_channel_permutation(const Window& x,
                                 const std::vector<std::size_t>& perm);
// Zeroes rows [offset, offset + length).
Window zero_segment(const Window& x, std::size_t offset, std::size_t length);

Window apply(const AugmentationSpec& spec, const Window& x, Rng& rng);

enum class PairComposition {
  kApplyAll,   // every spec, in order, per view
  kPickOne,    // one spec drawn uniformly per view
};

// Two independently augmented views of x.
std::pair<Window, Window> sample_positive_pair(
    const Window& x, const std::vector<AugmentationSpec>& specs, Rng& rng,
    PairComposition composition = PairComposition::kApplyAll);

// (spec applied to x, 1) with probability 1/2, otherwise (x, 0).
std::pair<Window, int> mtssl_example(const Window& x,
                                     const AugmentationSpec& spec, Rng& rng);
// Same with the coin fixed.
std::pair<Window, int> mtssl_example(const Window& x,
                                     const AugmentationSpec& spec,
                                     bool apply_transform, Rng& rng);

// Positive-pair and multi-task recipes per dataset profile.
std::vector<AugmentationSpec> musicid_pair_recipe();
std::vector<AugmentationSpec> mmi_pair_recipe();
std::vector<AugmentationSpec> musicid_mtssl_recipe();
std::vector<AugmentationSpec> mmi_mtssl_recipe();

}  // namespace siamts::augment

#endif  // SIAMTS_AUGMENT_TRANSFORMS_H_
