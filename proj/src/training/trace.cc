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

#include "siamts/training/trace.h"

namespace siamts::training {
namespace {

void put(std::ostream& out, const std::optional<double>& v) {
  if (v) out << *v;
}

}  // namespace

void write_trace_csv(std::ostream& out, const TrainTrace& trace) {
  out << "epoch,loss,val_metric,collapse_stat\n";
  const auto old = out.precision(17);
  for (std::size_t e = 0; e < trace.loss.size(); ++e) {
    out << e + 1 << ',' << trace.loss[e] << ',';
    if (e < trace.val_metric.size()) put(out, trace.val_metric[e]);
    out << ',';
    if (e < trace.collapse_stat.size()) put(out, trace.collapse_stat[e]);
    out << '\n';
  }
  out.precision(old);
}

}  // namespace siamts::training
