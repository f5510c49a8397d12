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

#include "ris/fieldsim.hpp"

#include <cmath>
#include <stdexcept>

#include "ris/kernels.hpp"

namespace ris {

void SimConfig::validate() const {
  if (!(element_factor_exponent >= 0.0)) {
    throw std::invalid_argument("element factor exponent must be >= 0");
  }
  if (!std::isfinite(power_offset_db) || !std::isfinite(floor_dbm)) {
    throw std::invalid_argument("sim config fields must be finite");
  }
}

namespace {

void pattern_signs(const RisPattern& pattern, const Scene& scene,
                   std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(scene.element_count()));
  std::size_t i = 0;
  for (int r = 0; r < scene.rows; ++r) {
    for (int c = 0; c < scene.cols; ++c, ++i) {
      // The library models plates up to 16x16; smaller plates use the
      // top-left corner of the pattern grid.
      out[i] = pattern.bit(r, c) == PhaseBit::on ? -1.0 : 1.0;
    }
  }
}

std::complex<double> planar_sum(const Scene& scene, const Pose& pose,
                                std::span<const double> sign,
                                const SimConfig& config) {
  // Plane waves along TX->centre and centre->RX; the centre element's
  // amplitude stands in for every element.
  const Vec3 tx = scene.tx_position();
  const Vec3 rx = scene.rx_position();
  const double r0 = scene.boresight_range_m();
  const Vec3 dir_in{-tx.x / r0, -tx.y / r0, -tx.z / r0};
  const Vec3 dir_out{rx.x / r0, rx.y / r0, rx.z / r0};
  const double k = scene.wavenumber();

  double amp = 1.0;
  const double q = config.element_factor_exponent;
  if (q != 0.0) {
    const Vec3 n = plate_normal(pose);
    const double cos_in = std::max(-dot(dir_in, n), 0.0);
    const double cos_out = std::max(dot(dir_out, n), 0.0);
    amp = std::pow(cos_in, q) * std::pow(cos_out, q);
  }

  const auto positions = element_positions(scene, pose);
  std::complex<double> sum;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double path = 2.0 * r0 + dot(dir_in, positions[i]) -
                        dot(dir_out, positions[i]);
    const double phase = -k * path;
    sum += sign[i] * amp *
           std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum;
}

}  // namespace

FieldResult received_power(const Scene& scene, const Pose& pose,
                           const RisPattern& pattern,
                           const SimConfig& config) {
  scene.validate();
  config.validate();

  std::vector<double> sign;
  pattern_signs(pattern, scene, sign);

  std::complex<double> sum;
  if (config.wave_model == WaveModel::planar) {
    sum = planar_sum(scene, pose, sign, config);
  } else {
    const std::size_t n = sign.size();
    std::vector<double> x(n), y(n), z(n);
    element_positions_soa(scene, pose, x, y, z);

    kernels::FieldBatch batch;
    batch.x = x.data();
    batch.y = y.data();
    batch.z = z.data();
    batch.sign = sign.data();
    batch.n = n;
    const Vec3 tx = scene.tx_position();
    const Vec3 rx = scene.rx_position();
    batch.tx_x = tx.x;
    batch.tx_y = tx.y;
    batch.tx_z = tx.z;
    batch.rx_x = rx.x;
    batch.rx_y = rx.y;
    batch.rx_z = rx.z;
    batch.wavenumber = scene.wavenumber();
    const double r0 = scene.boresight_range_m();
    batch.amp_scale = r0 * r0;
    batch.taper_q = config.element_factor_exponent;
    const Vec3 normal = plate_normal(pose);
    batch.normal_x = normal.x;
    batch.normal_y = normal.y;
    batch.normal_z = normal.z;

    const kernels::PhasorSum s = kernels::field_sum(batch);
    sum = {s.re, s.im};
  }

  const double magnitude = std::abs(sum);
  double power = scene.tx_power_dbm + config.power_offset_db +
                 20.0 * std::log10(magnitude);
  if (!(power > config.floor_dbm)) power = config.floor_dbm;
  return {sum, power};
}

PowerGrid sweep_grid_power(const Scene& scene, const SweepPlan& plan,
                           const RisPattern& pattern,
                           const SimConfig& config) {
  plan.validate();
  PowerGrid grid;
  grid.elevations_deg = plan.elevations();
  grid.azimuths_deg = plan.azimuths();
  grid.power_dbm.reserve(grid.elevations_deg.size() *
                         grid.azimuths_deg.size());
  for (const double el : grid.elevations_deg) {
    for (const double az : grid.azimuths_deg) {
      grid.power_dbm.push_back(
          received_power(scene, Pose{az, el}, pattern, config).power_dbm);
    }
  }
  return grid;
}

}  // namespace ris
