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

#include <chrono>
#include <cstddef>
#include <vector>

namespace ris {

/// Angular grid of a sweep. Grid points are generated by index
/// (value = start + i * step) so the last point lands exactly on the stop
/// angle instead of drifting there by accumulation.
struct SweepPlan {
  double az_start_deg = 0.0;
  double az_stop_deg = 180.0;
  double az_step_deg = 1.8;
  double el_start_deg = 0.0;
  double el_stop_deg = 0.0;
  double el_step_deg = 0.0;  // ignored when el_start == el_stop
  std::chrono::milliseconds dwell{150};

  /// Throws std::invalid_argument unless each axis span is a whole number
  /// of steps (within 1e-9 degrees) with positive step, or degenerate
  /// (start == stop).
  void validate() const;

  std::size_t azimuth_count() const;
  std::size_t elevation_count() const;
  std::size_t pose_count() const { return azimuth_count() * elevation_count(); }

  double azimuth_at(std::size_t i) const {
    return az_start_deg + static_cast<double>(i) * az_step_deg;
  }
  double elevation_at(std::size_t i) const {
    return el_start_deg + static_cast<double>(i) * el_step_deg;
  }

  std::vector<double> azimuths() const;
  std::vector<double> elevations() const;
};

/// Horizontal characteristic: azimuth 0..180 in 1.8 degree steps at
/// elevation 0. 101 poses.
SweepPlan plan_2d();

/// Spatial characteristic: the same azimuth grid at elevations -27..27 in
/// 9 degree steps. 707 poses.
SweepPlan plan_3d();

}  // namespace ris
