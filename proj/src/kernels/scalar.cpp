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

#include <cmath>

#include "ris/kernels.hpp"

namespace ris::kernels {

PhasorSum field_sum_scalar(const FieldBatch& b) {
  PhasorSum out;
  for (std::size_t i = 0; i < b.n; ++i) {
    const double dx_t = b.x[i] - b.tx_x;
    const double dy_t = b.y[i] - b.tx_y;
    const double dz_t = b.z[i] - b.tx_z;
    const double d_t = std::sqrt(dx_t * dx_t + dy_t * dy_t + dz_t * dz_t);
    const double dx_r = b.x[i] - b.rx_x;
    const double dy_r = b.y[i] - b.rx_y;
    const double dz_r = b.z[i] - b.rx_z;
    const double d_r = std::sqrt(dx_r * dx_r + dy_r * dy_r + dz_r * dz_r);

    double amplitude = b.amp_scale / (d_t * d_r);
    if (b.taper_q != 0.0) {
      // cos of the arrival/departure angles against the plate normal,
      // clamped at broadside-or-behind.
      const double cos_in = (-dx_t * b.normal_x - dy_t * b.normal_y -
                             dz_t * b.normal_z) /
                            d_t;
      const double cos_out = (-dx_r * b.normal_x - dy_r * b.normal_y -
                              dz_r * b.normal_z) /
                             d_r;
      amplitude *= std::pow(std::max(cos_in, 0.0), b.taper_q) *
                   std::pow(std::max(cos_out, 0.0), b.taper_q);
    }

    const double phase = -b.wavenumber * (d_t + d_r);
    out.re += b.sign[i] * amplitude * std::cos(phase);
    out.im += b.sign[i] * amplitude * std::sin(phase);
    out.amplitude_sum += amplitude;
  }
  return out;
}

Phasor signed_phasor_sum_scalar(const double* cos_phi, const double* sin_phi,
                                const double* sign, const double* weight,
                                std::size_t n) {
  Phasor out;
  if (weight == nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      out.re += sign[i] * cos_phi[i];
      out.im += sign[i] * sin_phi[i];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double sw = sign[i] * weight[i];
      out.re += sw * cos_phi[i];
      out.im += sw * sin_phi[i];
    }
  }
  return out;
}

}  // namespace ris::kernels
