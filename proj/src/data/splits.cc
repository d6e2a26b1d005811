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

#include "siamts/data/splits.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "siamts/common/error.h"
#include "siamts/data/windowing.h"

namespace siamts::data {
namespace {

std::string join(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ids[i]);
  }
  return out;
}

// Window indices grouped by user id, in input order.
std::map<int, std::vector<std::size_t>> by_user(std::span<const Window> ws) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (!ws[i].user_id) {
      throw DataError("labelled pool contains a window without a user id");
    }
    groups[*ws[i].user_id].push_back(i);
  }
  return groups;
}

// Per-user draw order that depends only on (seed, user).
std::vector<std::size_t> draw_order(std::size_t n, std::uint64_t seed, int user) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(user) + 0x5eedULL);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::vector<Window> pick(std::span<const Window> ws,
                         const std::map<int, std::size_t>& counts,
                         std::uint64_t seed) {
  std::vector<std::size_t> chosen;
  for (const auto& [user, idx] : by_user(ws)) {
    const std::vector<std::size_t> order = draw_order(idx.size(), seed, user);
    const std::size_t k = counts.at(user);
    for (std::size_t j = 0; j < k; ++j) chosen.push_back(idx[order[j]]);
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<Window> out;
  out.reserve(chosen.size());
  for (std::size_t i : chosen) out.push_back(ws[i]);
  return out;
}

void append(std::vector<Window>& dst, const std::vector<Window>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

DatasetSplit split_dataset(std::span<const SessionRecording> recs,
                           double fraction_d1, Rng& rng) {
  std::vector<int> users;
  for (const auto& r : recs) users.push_back(r.user_id);
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());
  if (users.size() < 2) {
    throw ConfigError("split_dataset: need at least 2 users");
  }
  // Floor, so that 20 users split 6 / 14 and 109 split 36 / 73.
  const auto n1 = static_cast<std::size_t>(
      std::floor(fraction_d1 * static_cast<double>(users.size()) + 1e-9));
  if (n1 == 0 || n1 >= users.size()) {
    throw ConfigError("split_dataset: fraction " + std::to_string(fraction_d1) +
                      " leaves one side without users");
  }
  std::shuffle(users.begin(), users.end(), rng);
  std::vector<int> first(users.begin(), users.begin() + static_cast<long>(n1));
  std::sort(first.begin(), first.end());

  DatasetSplit split;
  for (const auto& r : recs) {
    if (std::binary_search(first.begin(), first.end(), r.user_id)) {
      split.d1.push_back(r);
    } else {
      split.d2.push_back(r);
    }
  }
  return split;
}

SplitPools partition_sessions(std::span<const SessionRecording> recs,
                              const SessionRoles& roles, std::size_t steps,
                              double train_overlap) {
  std::map<int, std::vector<const SessionRecording*>> sessions;
  for (const auto& r : recs) sessions[r.user_id].push_back(&r);

  const std::size_t needed = roles.validation + roles.test + roles.labelled + 1;
  std::vector<int> short_users;
  for (const auto& [user, list] : sessions) {
    if (list.size() < needed) short_users.push_back(user);
  }
  if (!short_users.empty()) {
    throw DataError("partition_sessions: users with fewer than " +
                    std::to_string(needed) + " sessions: " + join(short_users));
  }

  std::vector<SessionRecording> unlabelled, labelled, validation, test;
  SplitPools pools;
  for (auto& [user, list] : sessions) {
    pools.users.push_back(user);
    std::sort(list.begin(), list.end(), [](const auto* a, const auto* b) {
      return a->session_id < b->session_id;
    });
    const std::size_t n = list.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t from_end = n - 1 - i;
      if (from_end < roles.test) {
        test.push_back(*list[i]);
      } else if (from_end < roles.test + roles.validation) {
        validation.push_back(*list[i]);
      } else if (from_end < roles.test + roles.validation + roles.labelled) {
        labelled.push_back(*list[i]);
      } else {
        unlabelled.push_back(*list[i]);
      }
    }
  }
  pools.unlabelled = window_sessions(unlabelled, steps, train_overlap);
  pools.labelled = window_sessions(labelled, steps, train_overlap);
  pools.validation = window_sessions(validation, steps, 0.0);
  pools.test = window_sessions(test, steps, 0.0);
  return pools;
}

std::vector<Window> subsample_per_user(std::span<const Window> labelled,
                                       double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("label fraction must lie in (0, 1]");
  }
  std::map<int, std::size_t> counts;
  std::vector<int> empty;
  for (const auto& [user, idx] : by_user(labelled)) {
    const auto k = static_cast<std::size_t>(
        std::lround(fraction * static_cast<double>(idx.size())));
    if (k == 0) empty.push_back(user);
    counts[user] = k;
  }
  if (!empty.empty()) {
    throw DataError("label fraction " + std::to_string(fraction) +
                    " leaves no training windows for users: " + join(empty));
  }
  return pick(labelled, counts, seed);
}

std::vector<Window> take_per_user(std::span<const Window> labelled,
                                  std::size_t count, std::uint64_t seed) {
  std::map<int, std::size_t> counts;
  for (const auto& [user, idx] : by_user(labelled)) {
    counts[user] = std::min(count, idx.size());
  }
  return pick(labelled, counts, seed);
}

ScenarioSplit make_scenario(int scenario, const SplitPools& d1,
                            const SplitPools& d2, double label_fraction,
                            std::uint64_t seed) {
  ScenarioSplit s;
  s.scenario = scenario;
  switch (scenario) {
    case 1:
      s.unlabelled = strip_labels(d1.unlabelled);
      s.labelled = subsample_per_user(d2.labelled, label_fraction, seed);
      s.validation = d2.validation;
      s.test = d2.test;
      s.source_labelled = d1.labelled;
      s.source_validation = d1.validation;
      break;
    case 2:
      s.unlabelled = strip_labels(d2.unlabelled);
      s.labelled = subsample_per_user(d2.labelled, label_fraction, seed);
      s.validation = d2.validation;
      s.test = d2.test;
      break;
    case 3:
      s.unlabelled = strip_labels(d1.unlabelled);
      s.labelled = subsample_per_user(d1.labelled, label_fraction, seed);
      append(s.labelled, subsample_per_user(d2.labelled, label_fraction, seed));
      s.validation = d1.validation;
      append(s.validation, d2.validation);
      s.test = d1.test;
      append(s.test, d2.test);
      break;
    default:
      throw ConfigError("scenario must be 1, 2 or 3, got " +
                        std::to_string(scenario));
  }
  return s;
}

}  // namespace siamts::data
