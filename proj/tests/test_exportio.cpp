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

#include <doctest.h>

#include <cmath>
#include <filesystem>

#include <json.hpp>

#include "ris/exportio.hpp"
#include "ris/pattern_spec.hpp"

using namespace ris;

namespace {

std::vector<MeasurementRecord> sample_records() {
  const ControlString control = encode(uniform(PhaseBit::on));
  std::vector<MeasurementRecord> records;
  for (int i = 0; i < 5; ++i) {
    records.push_back(MeasurementRecord{
        "uniform:on", control, 1.8 * i, 0.0, -42.125 + i,
        static_cast<std::uint64_t>(i), time_from_unix_seconds(1700000000 + i)});
  }
  return records;
}

}  // namespace

TEST_CASE("rfc3339 timestamps") {
  CHECK(format_rfc3339_utc(time_from_unix_seconds(0)) ==
        "1970-01-01T00:00:00Z");
  CHECK(format_rfc3339_utc(time_from_unix_seconds(1700000000)) ==
        "2023-11-14T22:13:20Z");
}

TEST_CASE("records CSV writes the exact schema and round-trips") {
  const auto records = sample_records();
  const std::string text = records_csv(records);
  CHECK(text.rfind("pattern_id,azimuth_deg,elevation_deg,power_dbm,sequence,"
                   "timestamp_utc\n",
                   0) == 0);

  const auto rows = parse_records_csv(text);
  REQUIRE(rows.size() == records.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].pattern_id == records[i].pattern_id);
    CHECK(rows[i].azimuth_deg ==
          doctest::Approx(records[i].azimuth_deg).epsilon(1e-9));
    CHECK(rows[i].power_dbm ==
          doctest::Approx(records[i].power_dbm).epsilon(1e-9));
    CHECK(rows[i].sequence == records[i].sequence);
    CHECK(rows[i].timestamp_utc == format_rfc3339_utc(records[i].timestamp));
  }

  SUBCASE("powers carry three decimals, angles one") {
    CHECK(text.find("-42.125") != std::string::npos);
    CHECK(text.find("1.8,0.0") != std::string::npos);
  }
  SUBCASE("unsafe pattern ids are rejected") {
    auto bad = records;
    bad[0].pattern_id = "has,comma";
    CHECK_THROWS_AS(records_csv(bad), std::invalid_argument);
  }
  SUBCASE("wrong header rejected") {
    CHECK_THROWS_AS(parse_records_csv("a,b,c\n1,2,3\n"), std::invalid_argument);
  }
  SUBCASE("short line rejected") {
    const std::string damaged = std::string(records_csv_header) + "\nx,1,2\n";
    CHECK_THROWS_AS(parse_records_csv(damaged), std::invalid_argument);
  }
}

TEST_CASE("heatmap layout") {
  PowerGrid grid;
  grid.elevations_deg = {-9.0, 0.0, 9.0};
  grid.azimuths_deg = {0.0, 90.0};
  grid.power_dbm = {-50.0, -40.0, -30.5, -20.25, -10.0, -60.75};
  const std::string text = heatmap_csv(grid);
  CHECK(text ==
        ",0.0,90.0\n"
        "-9.0,-50.000,-40.000\n"
        "0.0,-30.500,-20.250\n"
        "9.0,-10.000,-60.750\n");
}

TEST_CASE("polar csv") {
  const std::vector<double> az = {0.0, 1.8};
  const std::vector<double> power = {-50.0, -49.5};
  CHECK(polar_csv(az, power) ==
        "azimuth_deg,power_dbm\n0.0,-50.000\n1.8,-49.500\n");
  const std::vector<double> mismatched = {1.0};
  CHECK_THROWS_AS(polar_csv(az, mismatched), std::invalid_argument);
}

TEST_CASE("polar svg is deterministic and carries one vertex per record") {
  std::vector<RecordRow> rows;
  for (int i = 0; i <= 100; ++i) {
    rows.push_back(RecordRow{"uniform:on", 1.8 * i, 0.0,
                             -60.0 + 30.0 * std::sin(0.03 * i),
                             static_cast<std::uint64_t>(i),
                             "1970-01-01T00:00:00Z"});
  }
  const std::string svg = polar_svg(rows);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::size_t start = svg.find("points=\"");
  REQUIRE(start != std::string::npos);
  const std::size_t end = svg.find('"', start + 8);
  const std::string points = svg.substr(start + 8, end - start - 8);
  std::size_t vertices = 0;
  for (const char c : points) {
    if (c == ',') ++vertices;
  }
  CHECK(vertices == 101);

  CHECK(polar_svg(rows) == svg);  // byte-identical on the same input
  CHECK_THROWS_AS(polar_svg({}), std::invalid_argument);
}

TEST_CASE("manifest json") {
  const Scene scene;
  const std::vector<NamedPattern> patterns = {
      {"uniform:on", uniform(PhaseBit::on)}};
  const std::string text =
      manifest_json(scene, plan_2d(), SimConfig{}, patterns);
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("scene").at("frequency_hz").get<double>() == 5.5e9);
  CHECK(doc.at("plan").at("az_step_deg").get<double>() == 1.8);
  CHECK(doc.at("sim").at("wave_model").get<std::string>() == "spherical");
  CHECK(doc.at("patterns").size() == 1);
  CHECK(doc.at("patterns")[0].at("control_string").get<std::string>() ==
        encode(uniform(PhaseBit::on)).str());
}

TEST_CASE("atomic file write") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "ris_exportio_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path file = dir / "out.txt";
  write_file_atomic(file, "hello\n");
  CHECK(read_file(file) == "hello\n");
  write_file_atomic(file, "replaced\n");
  CHECK(read_file(file) == "replaced\n");
  CHECK(!std::filesystem::exists(file.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("pattern source mini-language") {
  CHECK(parse_pattern_source("uniform:on").pattern == uniform(PhaseBit::on));
  CHECK(parse_pattern_source("uniform:off").id == "uniform:off");
  CHECK(parse_pattern_source("stripes:v:2").pattern ==
        stripes(StripeOrientation::vertical, 2, PhaseBit::on));
  CHECK(parse_pattern_source("stripes:h:4:off").pattern ==
        stripes(StripeOrientation::horizontal, 4, PhaseBit::off));
  CHECK(parse_pattern_source("checker:8").pattern == checkerboard(8));
  CHECK(parse_pattern_source("random:42").pattern == random_pattern(42));
  CHECK(parse_pattern_source("random", 9).pattern == random_pattern(9));
  CHECK(parse_pattern_source("random", 9).id == "random:9");

  CHECK_THROWS_AS(parse_pattern_source("uniform:maybe"), BadPatternSpec);
  CHECK_THROWS_AS(parse_pattern_source("stripes:d:2"), BadPatternSpec);
  CHECK_THROWS_AS(parse_pattern_source("stripes:v:0"), BadPatternSpec);
  CHECK_THROWS_AS(parse_pattern_source("checker:99"), BadPatternSpec);
  CHECK_THROWS_AS(parse_pattern_source("no_such_file.grid"), BadPatternSpec);

  SUBCASE("grid file source") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "ris_patternspec_test";
    std::filesystem::create_directories(dir);
    const std::filesystem::path file = dir / "plate.grid";
    write_file_atomic(file, format_grid(checkerboard(2)));
    const NamedPattern named = parse_pattern_source(file.string());
    CHECK(named.id == "plate");
    CHECK(named.pattern == checkerboard(2));

    write_file_atomic(file, "0101\n");
    CHECK_THROWS_AS(parse_pattern_source(file.string()), BadPatternSpec);
    std::filesystem::remove_all(dir);
  }
}
