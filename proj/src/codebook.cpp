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

#include "ris/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "ris/kernels.hpp"

namespace ris {

namespace {

constexpr double two_pi = 2.0 * pi;

double reduce_mod_two_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

}  // namespace

void PhaseProfile::validate() const {
  if (phases.empty()) {
    throw std::invalid_argument("phase profile is empty");
  }
  for (const double phi : phases) {
    if (!(phi >= 0.0) || !(phi < two_pi)) {
      throw std::invalid_argument("phases must lie in [0, 2*pi)");
    }
  }
  if (!weights.empty()) {
    if (weights.size() != phases.size()) {
      throw std::invalid_argument("weights must match phases in length");
    }
    for (const double w : weights) {
      if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    }
  }
}

PhaseProfile phase_profile(const Scene& scene, const Pose& pose,
                           ProfileWeighting weighting,
                           const SimConfig& config) {
  const PathLengths paths = path_lengths(scene, pose);
  const double k = scene.wavenumber();

  PhaseProfile profile;
  profile.phases.reserve(paths.to_tx.size());
  for (std::size_t i = 0; i < paths.to_tx.size(); ++i) {
    profile.phases.push_back(
        reduce_mod_two_pi(-k * (paths.to_tx[i] + paths.to_rx[i])));
  }

  if (weighting == ProfileWeighting::amplitude) {
    config.validate();
    const double r0 = scene.boresight_range_m();
    const double q = config.element_factor_exponent;
    const Vec3 normal = plate_normal(pose);
    const auto positions = element_positions(scene, pose);
    const Vec3 tx = scene.tx_position();
    const Vec3 rx = scene.rx_position();
    profile.weights.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
      double amp = r0 * r0 / (paths.to_tx[i] * paths.to_rx[i]);
      if (q != 0.0) {
        const Vec3 to_tx = tx - positions[i];
        const Vec3 to_rx = rx - positions[i];
        const double cos_in =
            std::max(dot(to_tx, normal) / paths.to_tx[i], 0.0);
        const double cos_out =
            std::max(dot(to_rx, normal) / paths.to_rx[i], 0.0);
        amp *= std::pow(cos_in, q) * std::pow(cos_out, q);
      }
      profile.weights.push_back(amp);
    }
  }
  return profile;
}

namespace {

struct UnitPhasors {
  std::vector<double> cos_phi;
  std::vector<double> sin_phi;
};

UnitPhasors unit_phasors(const PhaseProfile& profile) {
  UnitPhasors up;
  up.cos_phi.reserve(profile.phases.size());
  up.sin_phi.reserve(profile.phases.size());
  for (const double phi : profile.phases) {
    up.cos_phi.push_back(std::cos(phi));
    up.sin_phi.push_back(std::sin(phi));
  }
  return up;
}

double evaluate(const UnitPhasors& up, const PhaseProfile& profile,
                std::span<const double> signs) {
  const kernels::Phasor sum = kernels::signed_phasor_sum(
      up.cos_phi.data(), up.sin_phi.data(), signs.data(),
      profile.weights.empty() ? nullptr : profile.weights.data(),
      signs.size());
  return std::hypot(sum.re, sum.im);
}

}  // namespace

BinarizeResult binarize(const PhaseProfile& profile) {
  profile.validate();
  const std::size_t n = profile.phases.size();
  const UnitPhasors up = unit_phasors(profile);

  // Candidate arc starts: every phase and every phase rotated by pi.
  std::vector<double> starts;
  starts.reserve(2 * n);
  for (const double phi : profile.phases) {
    starts.push_back(phi);
    starts.push_back(reduce_mod_two_pi(phi + pi));
  }

  std::vector<double> signs(n);
  std::vector<double> best_signs(n, 1.0);
  double best_magnitude = -1.0;

  for (const double start : starts) {
    for (std::size_t i = 0; i < n; ++i) {
      // fmod is exact, so membership of the half-open arc [start,
      // start + pi) is decided identically on every platform.
      double rel = std::fmod(profile.phases[i] - start, two_pi);
      if (rel < 0.0) rel += two_pi;
      signs[i] = rel < pi ? 1.0 : -1.0;
    }
    const double magnitude = evaluate(up, profile, signs);
    if (magnitude > best_magnitude) {
      best_magnitude = magnitude;
      std::copy(signs.begin(), signs.end(), best_signs.begin());
    }
  }

  BinarizeResult result;
  result.signs.reserve(n);
  for (const double s : best_signs) {
    result.signs.push_back(s > 0.0 ? std::int8_t{1} : std::int8_t{-1});
  }
  result.magnitude = best_magnitude;
  return result;
}

BinarizeResult exhaustive_optimum(const PhaseProfile& profile) {
  profile.validate();
  const std::size_t n = profile.phases.size();
  if (n > 20) {
    throw std::invalid_argument(
        "profile too large for the exhaustive oracle (N > 20)");
  }
  const UnitPhasors up = unit_phasors(profile);
  const double* w = profile.weights.empty() ? nullptr : profile.weights.data();

  std::uint32_t best_mask = 0;
  double best_sq = -1.0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = (mask >> i) & 1u ? -1.0 : 1.0;
      const double sw = w == nullptr ? s : s * w[i];
      re += sw * up.cos_phi[i];
      im += sw * up.sin_phi[i];
    }
    const double sq = re * re + im * im;
    if (sq > best_sq) {
      best_sq = sq;
      best_mask = mask;
    }
  }

  BinarizeResult result;
  result.signs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.signs.push_back((best_mask >> i) & 1u ? std::int8_t{-1}
                                                 : std::int8_t{1});
  }
  result.magnitude = std::sqrt(best_sq);
  return result;
}

RisPattern pattern_from_signs(std::span<const std::int8_t> signs) {
  if (signs.size() != RisPattern::element_count) {
    throw std::invalid_argument("sign vector must have 256 entries");
  }
  RisPattern p;
  for (int i = 0; i < RisPattern::element_count; ++i) {
    if (signs[static_cast<std::size_t>(i)] < 0) {
      p.set_bit(i / RisPattern::cols, i % RisPattern::cols, PhaseBit::on);
    }
  }
  return p;
}

Codebook::Codebook(std::vector<CodebookEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const CodebookEntry& a, const CodebookEntry& b) {
              if (a.pose.elevation_deg != b.pose.elevation_deg) {
                return a.pose.elevation_deg < b.pose.elevation_deg;
              }
              return a.pose.azimuth_deg < b.pose.azimuth_deg;
            });
}

const CodebookEntry& Codebook::nearest(const Pose& pose) const {
  if (entries_.empty()) throw std::invalid_argument("codebook is empty");
  const CodebookEntry* best = &entries_.front();
  double best_sq = std::numeric_limits<double>::infinity();
  for (const CodebookEntry& entry : entries_) {
    const double daz = entry.pose.azimuth_deg - pose.azimuth_deg;
    const double del = entry.pose.elevation_deg - pose.elevation_deg;
    const double sq = daz * daz + del * del;
    if (sq < best_sq) {
      best_sq = sq;
      best = &entry;
    }
  }
  return *best;
}

std::string Codebook::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const CodebookEntry& entry : entries_) {
    entries.push_back({{"azimuth_deg", entry.pose.azimuth_deg},
                       {"elevation_deg", entry.pose.elevation_deg},
                       {"control_string", entry.control.str()},
                       {"predicted_power_dbm", entry.predicted_power_dbm}});
  }
  nlohmann::json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

Codebook Codebook::from_json(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<CodebookEntry> entries;
  for (const nlohmann::json& item : doc.at("entries")) {
    const ControlString control(item.at("control_string").get<std::string>());
    entries.push_back(CodebookEntry{
        Pose{item.at("azimuth_deg").get<double>(),
             item.at("elevation_deg").get<double>()},
        decode(control), control,
        item.at("predicted_power_dbm").get<double>()});
  }
  return Codebook(std::move(entries));
}

Codebook build_codebook(const Scene& scene, const SweepPlan& targets,
                        const SimConfig& config, ProfileWeighting weighting) {
  scene.validate();
  targets.validate();
  if (scene.element_count() != RisPattern::element_count) {
    throw std::invalid_argument(
        "codebook construction needs the full 16x16 plate");
  }

  std::vector<CodebookEntry> entries;
  entries.reserve(targets.pose_count());
  for (const double el : targets.elevations()) {
    for (const double az : targets.azimuths()) {
      const Pose pose{az, el};
      const BinarizeResult bin =
          binarize(phase_profile(scene, pose, weighting, config));
      RisPattern pattern = pattern_from_signs(bin.signs);
      const double power = received_power(scene, pose, pattern, config).power_dbm;
      entries.push_back(
          CodebookEntry{pose, pattern, encode(pattern), power});
    }
  }
  return Codebook(std::move(entries));
}

}  // namespace ris
