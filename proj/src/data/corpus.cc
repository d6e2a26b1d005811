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

#include "siamts/data/corpus.h"

#include <algorithm>
#include <set>

#include "siamts/common/error.h"

namespace siamts::data {

DatasetProfile musicid_profile() {
  DatasetProfile p;
  p.name = "musicid";
  p.steps = 30;
  p.channels = 24;
  p.pretrain_epochs = 30;
  p.filters = {128, 256};
  p.pair_recipe = augment::musicid_pair_recipe();
  p.mtssl_recipe = augment::musicid_mtssl_recipe();
  p.probe_samples_per_user = 60;
  return p;
}

DatasetProfile mmi_profile() {
  DatasetProfile p;
  p.name = "mmi";
  p.steps = 128;
  p.channels = 40;
  p.pretrain_epochs = 10;
  p.filters = {48, 96};
  p.pair_recipe = augment::mmi_pair_recipe();
  p.mtssl_recipe = augment::mmi_mtssl_recipe();
  p.probe_samples_per_user = 300;
  return p;
}

DatasetProfile synth_profile() {
  DatasetProfile p;
  p.name = "synth";
  p.steps = 30;
  p.channels = 8;
  p.pretrain_epochs = 30;
  p.filters = {32, 64};
  p.pair_recipe = augment::musicid_pair_recipe();
  p.mtssl_recipe = augment::musicid_mtssl_recipe();
  p.probe_samples_per_user = 12;
  return p;
}

DatasetProfile profile_by_name(const std::string& name) {
  if (name == "musicid") return musicid_profile();
  if (name == "mmi") return mmi_profile();
  if (name == "synth") return synth_profile();
  throw ConfigError("unknown dataset profile '" + name +
                    "' (expected musicid, mmi or synth)");
}

std::vector<int> user_ids(const std::vector<SessionRecording>& recs) {
  std::set<int> users;
  for (const auto& r : recs) users.insert(r.user_id);
  return {users.begin(), users.end()};
}

}  // namespace siamts::data
