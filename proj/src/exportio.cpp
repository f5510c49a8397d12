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

#include "ris/exportio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ris/drivers.hpp"

namespace ris {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

void check_csv_safe(const std::string& id) {
  if (id.empty() || id.find_first_of(",\"\r\n") != std::string::npos) {
    throw std::invalid_argument("pattern id '" + id +
                                "' is empty or not CSV-safe");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_field_double(std::string_view field, int line_no) {
  double out = 0.0;
  const auto res =
      std::from_chars(field.data(), field.data() + field.size(), out);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("records line " + std::to_string(line_no) +
                                ": bad number '" + std::string(field) + "'");
  }
  return out;
}

}  // namespace

std::string format_rfc3339_utc(std::chrono::system_clock::time_point t) {
  const std::time_t seconds = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

std::chrono::system_clock::time_point time_from_unix_seconds(
    std::int64_t seconds) {
  return std::chrono::system_clock::time_point(std::chrono::seconds(seconds));
}

std::string records_csv(std::span<const MeasurementRecord> records) {
  std::string out(records_csv_header);
  out.push_back('\n');
  for (const MeasurementRecord& record : records) {
    check_csv_safe(record.pattern_id);
    out += record.pattern_id;
    out.push_back(',');
    out += fixed(record.azimuth_deg, 1);
    out.push_back(',');
    out += fixed(record.elevation_deg, 1);
    out.push_back(',');
    out += fixed(record.power_dbm, 3);
    out.push_back(',');
    out += std::to_string(record.sequence);
    out.push_back(',');
    out += format_rfc3339_utc(record.timestamp);
    out.push_back('\n');
  }
  return out;
}

std::vector<RecordRow> parse_records_csv(std::string_view text) {
  std::vector<RecordRow> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line_no == 1) {
      if (line != records_csv_header) {
        throw std::invalid_argument("records file has an unexpected header");
      }
    } else if (!line.empty()) {
      const auto fields = split(line, ',');
      if (fields.size() != 6) {
        throw std::invalid_argument("records line " + std::to_string(line_no) +
                                    ": expected 6 fields, got " +
                                    std::to_string(fields.size()));
      }
      RecordRow row;
      row.pattern_id = std::string(fields[0]);
      row.azimuth_deg = parse_field_double(fields[1], line_no);
      row.elevation_deg = parse_field_double(fields[2], line_no);
      row.power_dbm = parse_field_double(fields[3], line_no);
      std::uint64_t seq = 0;
      const auto res = std::from_chars(fields[4].data(),
                                       fields[4].data() + fields[4].size(), seq);
      if (res.ec != std::errc{} ||
          res.ptr != fields[4].data() + fields[4].size()) {
        throw std::invalid_argument("records line " + std::to_string(line_no) +
                                    ": bad sequence number");
      }
      row.sequence = seq;
      row.timestamp_utc = std::string(fields[5]);
      rows.push_back(std::move(row));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return rows;
}

std::string heatmap_csv(const PowerGrid& grid) {
  std::string out;
  for (const double az : grid.azimuths_deg) {
    out.push_back(',');
    out += fixed(az, 1);
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < grid.elevations_deg.size(); ++i) {
    out += fixed(grid.elevations_deg[i], 1);
    for (std::size_t j = 0; j < grid.azimuths_deg.size(); ++j) {
      out.push_back(',');
      out += fixed(grid.at(i, j), 3);
    }
    out.push_back('\n');
  }
  return out;
}

std::string polar_csv(std::span<const double> azimuths_deg,
                      std::span<const double> power_dbm) {
  if (azimuths_deg.size() != power_dbm.size()) {
    throw std::invalid_argument("angle and power columns differ in length");
  }
  std::string out = "azimuth_deg,power_dbm\n";
  for (std::size_t i = 0; i < azimuths_deg.size(); ++i) {
    out += fixed(azimuths_deg[i], 1);
    out.push_back(',');
    out += fixed(power_dbm[i], 3);
    out.push_back('\n');
  }
  return out;
}

std::string polar_svg(std::span<const RecordRow> rows, double floor_dbm) {
  if (rows.empty()) {
    throw std::invalid_argument("no records selected for the polar plot");
  }

  double max_power = floor_dbm;
  for (const RecordRow& row : rows) {
    max_power = std::max(max_power, row.power_dbm);
  }
  double top = std::ceil(max_power / 10.0) * 10.0;
  if (top <= floor_dbm) top = floor_dbm + 10.0;

  constexpr double cx = 320.0;
  constexpr double cy = 330.0;
  constexpr double radius = 280.0;

  const auto point = [&](double azimuth_deg, double power) {
    const double f =
        std::clamp((power - floor_dbm) / (top - floor_dbm), 0.0, 1.0);
    const double r = f * radius;
    const double a = deg_to_rad(azimuth_deg);
    return std::pair<double, double>(cx - r * std::cos(a),
                                     cy - r * std::sin(a));
  };

  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"380\" "
      "viewBox=\"0 0 640 380\">\n";
  svg += "<rect width=\"640\" height=\"380\" fill=\"white\"/>\n";

  // Radial grid: quarter arcs plus the outline.
  for (int ring = 1; ring <= 4; ++ring) {
    const double r = radius * ring / 4.0;
    svg += "<path d=\"M " + fixed(cx - r, 2) + " " + fixed(cy, 2) + " A " +
           fixed(r, 2) + " " + fixed(r, 2) + " 0 0 1 " + fixed(cx + r, 2) +
           " " + fixed(cy, 2) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  }
  for (int deg = 0; deg <= 180; deg += 30) {
    const auto [x, y] = std::pair<double, double>(
        cx - radius * std::cos(deg_to_rad(deg)),
        cy - radius * std::sin(deg_to_rad(deg)));
    svg += "<line x1=\"" + fixed(cx, 2) + "\" y1=\"" + fixed(cy, 2) +
           "\" x2=\"" + fixed(x, 2) + "\" y2=\"" + fixed(y, 2) +
           "\" stroke=\"#cccccc\"/>\n";
    svg += "<text x=\"" + fixed(cx - (radius + 16.0) * std::cos(deg_to_rad(deg)), 2) +
           "\" y=\"" + fixed(cy - (radius + 6.0) * std::sin(deg_to_rad(deg)), 2) +
           "\" font-family=\"monospace\" font-size=\"11\" "
           "text-anchor=\"middle\">" +
           std::to_string(deg) + "&#176;</text>\n";
  }
  svg += "<text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" +
         rows.front().pattern_id + " [" + fixed(floor_dbm, 0) + " dBm .. " +
         fixed(top, 0) + " dBm]</text>\n";

  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [x, y] = point(rows[i].azimuth_deg, rows[i].power_dbm);
    if (i != 0) svg.push_back(' ');
    svg += fixed(x, 2) + "," + fixed(y, 2);
  }
  svg += "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string manifest_json(const Scene& scene, const SweepPlan& plan,
                          const SimConfig& config,
                          std::span<const NamedPattern> patterns) {
  nlohmann::json doc;
  doc["scene"] = {{"antenna_offset_m", scene.antenna_offset_m},
                  {"standoff_m", scene.standoff_m},
                  {"mount_height_m", scene.mount_height_m},
                  {"element_spacing_m", scene.element_spacing_m},
                  {"rows", scene.rows},
                  {"cols", scene.cols},
                  {"frequency_hz", scene.frequency_hz},
                  {"tx_power_dbm", scene.tx_power_dbm}};
  doc["plan"] = {{"az_start_deg", plan.az_start_deg},
                 {"az_stop_deg", plan.az_stop_deg},
                 {"az_step_deg", plan.az_step_deg},
                 {"el_start_deg", plan.el_start_deg},
                 {"el_stop_deg", plan.el_stop_deg},
                 {"el_step_deg", plan.el_step_deg},
                 {"dwell_ms", plan.dwell.count()}};
  doc["sim"] = {{"wave_model", config.wave_model == WaveModel::spherical
                                   ? "spherical"
                                   : "planar"},
                {"element_factor_exponent", config.element_factor_exponent},
                {"power_offset_db", config.power_offset_db},
                {"floor_dbm", config.floor_dbm}};
  nlohmann::json pats = nlohmann::json::array();
  for (const NamedPattern& p : patterns) {
    pats.push_back(
        {{"id", p.id}, {"control_string", encode(p.pattern).str()}});
  }
  doc["patterns"] = std::move(pats);
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out.flush()) {
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

}  // namespace ris
