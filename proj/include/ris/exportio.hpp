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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ris/fieldsim.hpp"
#include "ris/sweep.hpp"

namespace ris {

/// Seconds-resolution RFC 3339 UTC stamp, e.g. "2024-05-01T12:00:00Z".
std::string format_rfc3339_utc(std::chrono::system_clock::time_point t);

std::chrono::system_clock::time_point time_from_unix_seconds(
    std::int64_t seconds);

inline constexpr std::string_view records_csv_header =
    "pattern_id,azimuth_deg,elevation_deg,power_dbm,sequence,timestamp_utc";

/// Records file: the exact header above, one record per line in sequence
/// order, angles with one decimal, powers with three, RFC 3339 timestamps.
std::string records_csv(std::span<const MeasurementRecord> records);

/// One parsed line of a records file. The timestamp keeps its wire form.
struct RecordRow {
  std::string pattern_id;
  double azimuth_deg;
  double elevation_deg;
  double power_dbm;
  std::uint64_t sequence;
  std::string timestamp_utc;
};

std::vector<RecordRow> parse_records_csv(std::string_view text);

/// Heatmap file: first row is the azimuth grid, first column the elevation
/// grid, the corner cell empty, body cells power in dBm.
std::string heatmap_csv(const PowerGrid& grid);

/// Two-column angle/power file for external plotting.
std::string polar_csv(std::span<const double> azimuths_deg,
                      std::span<const double> power_dbm);

/// Minimal semicircular polar plot of one pattern's 2D characteristic.
/// Rows must be a single-elevation selection sorted by azimuth. The radial
/// axis spans [floor_dbm, max power rounded up to 10 dB]; output bytes are
/// a pure function of the input.
std::string polar_svg(std::span<const RecordRow> rows,
                      double floor_dbm = -110.0);

/// Campaign manifest: scene, plan, simulator configuration and the
/// id -> control string table for every pattern in the run.
std::string manifest_json(const Scene& scene, const SweepPlan& plan,
                          const SimConfig& config,
                          std::span<const NamedPattern> patterns);

/// Writes via a temporary file in the same directory plus an atomic rename.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace ris
