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

#include "ris/sweep_plan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ris {

namespace {

std::size_t axis_count(double start, double stop, double step,
                       const char* axis) {
  if (stop == start) return 1;
  if (stop < start) {
    throw std::invalid_argument(std::string(axis) +
                                " stop must not precede start");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument(std::string(axis) +
                                " step must be positive for a non-degenerate "
                                "range");
  }
  const double steps = (stop - start) / step;
  if (!(steps < 1e7)) {
    throw std::invalid_argument(std::string(axis) +
                                " step is absurdly small for the range");
  }
  const auto n = static_cast<long long>(std::llround(steps));
  if (n < 1 || std::fabs((stop - start) - static_cast<double>(n) * step) > 1e-9) {
    throw std::invalid_argument(std::string(axis) +
                                " range is not a whole number of steps");
  }
  return static_cast<std::size_t>(n) + 1;
}

}  // namespace

void SweepPlan::validate() const {
  axis_count(az_start_deg, az_stop_deg, az_step_deg, "azimuth");
  axis_count(el_start_deg, el_stop_deg, el_step_deg, "elevation");
  if (dwell.count() < 0) {
    throw std::invalid_argument("dwell must not be negative");
  }
}

std::size_t SweepPlan::azimuth_count() const {
  return axis_count(az_start_deg, az_stop_deg, az_step_deg, "azimuth");
}

std::size_t SweepPlan::elevation_count() const {
  return axis_count(el_start_deg, el_stop_deg, el_step_deg, "elevation");
}

std::vector<double> SweepPlan::azimuths() const {
  std::vector<double> out(azimuth_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = azimuth_at(i);
  return out;
}

std::vector<double> SweepPlan::elevations() const {
  std::vector<double> out(elevation_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = elevation_at(i);
  return out;
}

SweepPlan plan_2d() {
  SweepPlan plan;
  plan.az_start_deg = 0.0;
  plan.az_stop_deg = 180.0;
  plan.az_step_deg = 1.8;
  plan.el_start_deg = 0.0;
  plan.el_stop_deg = 0.0;
  plan.el_step_deg = 0.0;
  return plan;
}

SweepPlan plan_3d() {
  SweepPlan plan = plan_2d();
  plan.el_start_deg = -27.0;
  plan.el_stop_deg = 27.0;
  plan.el_step_deg = 9.0;
  return plan;
}

}  // namespace ris
