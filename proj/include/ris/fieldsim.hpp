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

#include <complex>
#include <vector>

#include "ris/geometry.hpp"
#include "ris/pattern.hpp"
#include "ris/sweep_plan.hpp"

namespace ris {

/// Spherical propagates true per-element path lengths; planar substitutes
/// plane waves along the antenna-to-centre directions (textbook array
/// factor). Spherical is the default: at 5.5 GHz the plate sits well
/// inside its own Fraunhofer distance for this rig, so plane-wave phases
/// would misplace the lobes.
enum class WaveModel { spherical, planar };

struct SimConfig {
  WaveModel wave_model = WaveModel::spherical;
  /// cos^q element factor applied to both the arrival and departure angle.
  /// 0 = isotropic elements.
  double element_factor_exponent = 0.0;
  /// Additive calibration constant folded into every reported power.
  double power_offset_db = 0.0;
  /// Reported powers are clamped below at the analyzer's displayed noise
  /// floor.
  double floor_dbm = -110.0;

  void validate() const;  // throws std::invalid_argument
};

struct FieldResult {
  std::complex<double> complex_sum;
  double power_dbm;
};

/// Coherent per-element summation of the reflected field. Element n
/// contributes sign_n * a_n * exp(-j*k*(d_tx,n + d_rx,n)) where sign_n is
/// -1 when the element applies its 180 degree shift, and a_n is the cos^q
/// taper times r0^2 / (d_tx,n * d_rx,n) with r0 the antenna-to-centre
/// range (so amplitudes are ~1 at the plate centre). Reported power is
/// tx_power + power_offset + 20*log10|sum|, clamped at the floor.
FieldResult received_power(const Scene& scene, const Pose& pose,
                           const RisPattern& pattern,
                           const SimConfig& config = {});

struct PowerGrid {
  std::vector<double> elevations_deg;  // ascending
  std::vector<double> azimuths_deg;    // ascending
  std::vector<double> power_dbm;       // elevation-major

  double at(std::size_t el_index, std::size_t az_index) const {
    return power_dbm[el_index * azimuths_deg.size() + az_index];
  }
};

/// Power at every pose of the plan grid; entry (i, j) is bit-identical to a
/// pointwise received_power call at (elevation_i, azimuth_j).
PowerGrid sweep_grid_power(const Scene& scene, const SweepPlan& plan,
                           const RisPattern& pattern,
                           const SimConfig& config = {});

}  // namespace ris
