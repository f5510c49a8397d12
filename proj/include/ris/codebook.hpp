// Copyright 2026 The risbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ris/fieldsim.hpp"
#include "ris/geometry.hpp"
#include "ris/pattern.hpp"
#include "ris/sweep_plan.hpp"

namespace ris {

/// Per-element propagation phases at a target pose, reduced to [0, 2*pi).
/// Weights are optional per-element amplitudes (empty means unit weights);
/// when present they must match phases in length and be positive.
struct PhaseProfile {
  std::vector<double> phases;
  std::vector<double> weights;

  void validate() const;  // throws std::invalid_argument
};

enum class ProfileWeighting { uniform, amplitude };

/// phi_n = (-k * (d_tx,n + d_rx,n)) mod 2*pi at the target pose. With
/// amplitude weighting the profile also carries each element's simulated
/// amplitude, making the binarizer optimize exactly the quantity the
/// simulator reports.
PhaseProfile phase_profile(const Scene& scene, const Pose& pose,
                           ProfileWeighting weighting = ProfileWeighting::uniform,
                           const SimConfig& config = {});

/// signs[n] is +1 (element keeps its phase) or -1 (element adds 180
/// degrees, i.e. pattern bit on).
struct BinarizeResult {
  std::vector<std::int8_t> signs;
  double magnitude;
};

/// Chooses the sign vector maximizing |sum_n s_n * w_n * e^{j*phi_n}|,
/// exactly, in O(N^2):
///
/// At any maximizer the +1 elements occupy an open half-plane through the
/// origin, so some optimal assignment has the +1 set equal to a half-open
/// arc [a, a + pi) with a at an element phase or at an element phase + pi.
/// The scan evaluates all 2N such arcs and keeps the best. Membership uses
/// exact floating-point remainder arithmetic rather than trigonometry, so
/// boundary cases (equal or antipodal phases) are decided deterministically:
/// the arc includes its start and excludes its end.
BinarizeResult binarize(const PhaseProfile& profile);

/// Brute force over all 2^N sign vectors. Guarded to N <= 20.
BinarizeResult exhaustive_optimum(const PhaseProfile& profile);

/// Maps a 256-element sign vector to the pattern grid (-1 -> bit on).
RisPattern pattern_from_signs(std::span<const std::int8_t> signs);

struct CodebookEntry {
  Pose pose;
  RisPattern pattern;
  ControlString control;
  double predicted_power_dbm;
};

/// Steering table: one pre-optimized pattern per target pose. Entries are
/// sorted by (elevation, azimuth); lookups snap to the nearest target by
/// Euclidean distance in degrees (ties to the earlier entry).
class Codebook {
public:
  explicit Codebook(std::vector<CodebookEntry> entries);

  const std::vector<CodebookEntry>& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

  const CodebookEntry& nearest(const Pose& pose) const;

  std::string to_json() const;
  static Codebook from_json(std::string_view text);

private:
  std::vector<CodebookEntry> entries_;
};

/// Builds one entry per pose of the target grid; predicted power comes from
/// the same simulator configuration the entry will be validated against.
Codebook build_codebook(const Scene& scene, const SweepPlan& targets,
                        const SimConfig& config = {},
                        ProfileWeighting weighting = ProfileWeighting::uniform);

}  // namespace ris
