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

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ris {

constexpr double speed_of_light_mps = 299792458.0;
constexpr double pi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * (pi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / pi); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// The measurement scene. Coordinate frame: origin at the plate centre,
/// +y toward the antenna line, +x from the transmit antenna toward the
/// receive antenna, +z up. Both antennas sit on the line y = standoff_m,
/// symmetric about x = 0, at the same height as the plate centre
/// (mount_height_m is metadata only).
struct Scene {
  double antenna_offset_m = 1.0;   // half the TX-RX separation
  double standoff_m = 1.5;         // antenna line to plate line
  double mount_height_m = 1.3;
  double element_spacing_m = 0.5 * speed_of_light_mps / 5.5e9;
  int rows = 16;
  int cols = 16;
  double frequency_hz = 5.5e9;
  double tx_power_dbm = -10.0;

  void validate() const;  // throws std::invalid_argument

  int element_count() const { return rows * cols; }
  double wavenumber() const {
    return 2.0 * pi * frequency_hz / speed_of_light_mps;
  }
  /// Distance from either antenna to the plate centre.
  double boresight_range_m() const {
    return std::sqrt(antenna_offset_m * antenna_offset_m +
                     standoff_m * standoff_m);
  }
  Vec3 tx_position() const { return {-antenna_offset_m, standoff_m, 0.0}; }
  Vec3 rx_position() const { return {antenna_offset_m, standoff_m, 0.0}; }
};

/// Orientation of the rotating plate. Azimuth 90 degrees puts the plate
/// parallel to the antenna line with its outward normal facing the antennas
/// (+y); the normal swings from -x at azimuth 0 through +y at 90 to +x at
/// 180. Positive elevation tilts the normal upward.
struct Pose {
  double azimuth_deg = 90.0;
  double elevation_deg = 0.0;
};

/// Angle at which each antenna is aimed at the plate centre, in degrees:
/// arctan(standoff / antenna offset).
double aim_angle_deg(const Scene& scene);

/// Outward normal of the plate at `pose`.
Vec3 plate_normal(const Pose& pose);

/// Element centre positions in metres, row-major to match RisPattern.
/// The local grid (u to the right, w up, both in the plate plane) is tilted
/// by the elevation angle about the plate's horizontal axis and then yawed
/// about the global z axis; the plate centre stays at the origin.
std::vector<Vec3> element_positions(const Scene& scene, const Pose& pose);

/// Same positions written into caller-provided coordinate arrays
/// (each of length scene.element_count()).
void element_positions_soa(const Scene& scene, const Pose& pose,
                           std::span<double> x, std::span<double> y,
                           std::span<double> z);

struct PathLengths {
  std::vector<double> to_tx;  // metres, row-major
  std::vector<double> to_rx;
};

PathLengths path_lengths(const Scene& scene, const Pose& pose);

/// key=value scene file, one field per line, '#' comments allowed.
std::string format_scene(const Scene& scene);
Scene parse_scene(std::string_view text);  // throws std::invalid_argument

}  // namespace ris
