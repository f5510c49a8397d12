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

#include "ris/geometry.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace ris {

void Scene::validate() const {
  if (!(antenna_offset_m > 0.0))
    throw std::invalid_argument("antenna offset must be > 0");
  if (!(standoff_m > 0.0)) throw std::invalid_argument("standoff must be > 0");
  if (!(element_spacing_m > 0.0))
    throw std::invalid_argument("element spacing must be > 0");
  if (!(frequency_hz > 0.0))
    throw std::invalid_argument("frequency must be > 0");
  if (rows < 1 || cols < 1 || rows > 16 || cols > 16)
    throw std::invalid_argument("plate dimensions must be within 1..16");
  if (!std::isfinite(tx_power_dbm) || !std::isfinite(mount_height_m))
    throw std::invalid_argument("scene fields must be finite");
}

double aim_angle_deg(const Scene& scene) {
  scene.validate();
  return rad_to_deg(std::atan2(scene.standoff_m, scene.antenna_offset_m));
}

namespace {

// Trig factors for a pose. The yaw angle is 90 - azimuth so that the plate
// normal points along -x at azimuth 0, +y at 90 and +x at 180, matching the
// turntable convention of the rig.
struct PoseRotation {
  double cos_yaw, sin_yaw, cos_el, sin_el;

  explicit PoseRotation(const Pose& pose) {
    const double yaw = deg_to_rad(90.0 - pose.azimuth_deg);
    const double el = deg_to_rad(pose.elevation_deg);
    cos_yaw = std::cos(yaw);
    sin_yaw = std::sin(yaw);
    cos_el = std::cos(el);
    sin_el = std::sin(el);
  }

  // Maps local plate coordinates (elevation about local x, then yaw about
  // global z) to the global frame.
  Vec3 apply(double u, double w) const {
    const double y_tilted = -w * sin_el;
    const double z_tilted = w * cos_el;
    return {u * cos_yaw - y_tilted * sin_yaw, u * sin_yaw + y_tilted * cos_yaw,
            z_tilted};
  }

  Vec3 normal() const {
    return {-cos_el * sin_yaw, cos_el * cos_yaw, sin_el};
  }
};

}  // namespace

Vec3 plate_normal(const Pose& pose) { return PoseRotation(pose).normal(); }

std::vector<Vec3> element_positions(const Scene& scene, const Pose& pose) {
  scene.validate();
  const PoseRotation rot(pose);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(scene.element_count()));
  const double half_cols = (scene.cols - 1) / 2.0;
  const double half_rows = (scene.rows - 1) / 2.0;
  for (int r = 0; r < scene.rows; ++r) {
    for (int c = 0; c < scene.cols; ++c) {
      const double u = (c - half_cols) * scene.element_spacing_m;
      const double w = (half_rows - r) * scene.element_spacing_m;
      out.push_back(rot.apply(u, w));
    }
  }
  return out;
}

void element_positions_soa(const Scene& scene, const Pose& pose,
                           std::span<double> x, std::span<double> y,
                           std::span<double> z) {
  const std::size_t n = static_cast<std::size_t>(scene.element_count());
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw std::invalid_argument("position buffers must match element count");
  }
  scene.validate();
  const PoseRotation rot(pose);
  const double half_cols = (scene.cols - 1) / 2.0;
  const double half_rows = (scene.rows - 1) / 2.0;
  std::size_t i = 0;
  for (int r = 0; r < scene.rows; ++r) {
    for (int c = 0; c < scene.cols; ++c, ++i) {
      const double u = (c - half_cols) * scene.element_spacing_m;
      const double w = (half_rows - r) * scene.element_spacing_m;
      const Vec3 p = rot.apply(u, w);
      x[i] = p.x;
      y[i] = p.y;
      z[i] = p.z;
    }
  }
}

PathLengths path_lengths(const Scene& scene, const Pose& pose) {
  const auto positions = element_positions(scene, pose);
  const Vec3 tx = scene.tx_position();
  const Vec3 rx = scene.rx_position();
  PathLengths out;
  out.to_tx.reserve(positions.size());
  out.to_rx.reserve(positions.size());
  for (const Vec3& p : positions) {
    out.to_tx.push_back(norm(tx - p));
    out.to_rx.push_back(norm(rx - p));
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw std::invalid_argument("scene field " + std::string(key) +
                                ": cannot parse number '" + std::string(value) +
                                "'");
  }
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw std::invalid_argument("scene field " + std::string(key) +
                                ": cannot parse integer '" +
                                std::string(value) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_scene(const Scene& scene) {
  std::string out;
  out += "antenna_offset_m=" + format_double(scene.antenna_offset_m) + "\n";
  out += "standoff_m=" + format_double(scene.standoff_m) + "\n";
  out += "mount_height_m=" + format_double(scene.mount_height_m) + "\n";
  out += "element_spacing_m=" + format_double(scene.element_spacing_m) + "\n";
  out += "rows=" + std::to_string(scene.rows) + "\n";
  out += "cols=" + std::to_string(scene.cols) + "\n";
  out += "frequency_hz=" + format_double(scene.frequency_hz) + "\n";
  out += "tx_power_dbm=" + format_double(scene.tx_power_dbm) + "\n";
  return out;
}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    line = trim(line);
    if (!line.empty() && line.front() != '#') {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("scene file line " +
                                    std::to_string(line_no) +
                                    ": expected key=value");
      }
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key == "antenna_offset_m") {
        scene.antenna_offset_m = parse_double(key, value);
      } else if (key == "standoff_m") {
        scene.standoff_m = parse_double(key, value);
      } else if (key == "mount_height_m") {
        scene.mount_height_m = parse_double(key, value);
      } else if (key == "element_spacing_m") {
        scene.element_spacing_m = parse_double(key, value);
      } else if (key == "rows") {
        scene.rows = parse_int(key, value);
      } else if (key == "cols") {
        scene.cols = parse_int(key, value);
      } else if (key == "frequency_hz") {
        scene.frequency_hz = parse_double(key, value);
      } else if (key == "tx_power_dbm") {
        scene.tx_power_dbm = parse_double(key, value);
      } else {
        throw std::invalid_argument("scene file line " +
                                    std::to_string(line_no) +
                                    ": unknown key '" + std::string(key) + "'");
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  scene.validate();
  return scene;
}

}  // namespace ris
