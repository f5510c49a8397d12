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

// risbench: desk-scale RIS measurement bench.
//
//   encode     pattern source -> control string
//   decode     control string -> grid text
//   simulate   run a 2d/3d sweep campaign on the simulated rig
//   codebook   build or query a steering codebook
//   polar-svg  render a records file as a semicircular polar plot
//
// Exit codes: 0 success, 2 usage error, 1 runtime error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ris/codebook.hpp"
#include "ris/exportio.hpp"
#include "ris/fieldsim.hpp"
#include "ris/pattern_spec.hpp"
#include "ris/sweep.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

struct SceneFlags {
  std::optional<std::string> scene_file;
  std::optional<double> spacing;
  std::optional<double> frequency;
  std::optional<double> tx_power;

  void attach(CLI::App& cmd) {
    cmd.add_option("--scene", scene_file,
                   "key=value scene file (defaults to the bench scene)");
    cmd.add_option("--spacing", spacing, "element spacing in metres");
    cmd.add_option("--freq", frequency, "carrier frequency in Hz");
    cmd.add_option("--tx-power", tx_power, "transmit power in dBm");
  }

  ris::Scene build() const {
    ris::Scene scene;
    if (scene_file) scene = ris::parse_scene(ris::read_file(*scene_file));
    if (spacing) scene.element_spacing_m = *spacing;
    if (frequency) scene.frequency_hz = *frequency;
    if (tx_power) scene.tx_power_dbm = *tx_power;
    scene.validate();
    return scene;
  }
};

std::string sanitize_id(std::string id) {
  for (char& c : id) {
    if (c == ':' || c == '/' || c == '\\' || c == ' ') c = '-';
  }
  return id;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

int run_encode(const std::string& source, std::uint64_t seed) {
  const ris::NamedPattern named = ris::parse_pattern_source(source, seed);
  std::printf("%s\n", ris::encode(named.pattern).str().c_str());
  return exit_ok;
}

int run_decode(const std::string& control) {
  const ris::RisPattern pattern = ris::decode(control);
  std::fputs(ris::format_grid(pattern).c_str(), stdout);
  return exit_ok;
}

struct SimulateArgs {
  std::string scenario;
  std::vector<std::string> pattern_specs;
  std::string out_dir;
  SceneFlags scene_flags;
  double power_offset = 0.0;
  double floor_dbm = -110.0;
  double element_factor = 0.0;
  bool planar = false;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> fixed_clock;
};

int run_simulate(const SimulateArgs& args) {
  const ris::Scene scene = args.scene_flags.build();

  ris::SimConfig config;
  config.wave_model =
      args.planar ? ris::WaveModel::planar : ris::WaveModel::spherical;
  config.power_offset_db = args.power_offset;
  config.floor_dbm = args.floor_dbm;
  config.element_factor_exponent = args.element_factor;
  config.validate();

  const ris::SweepPlan plan =
      args.scenario == "3d" ? ris::plan_3d() : ris::plan_2d();

  std::vector<ris::NamedPattern> patterns;
  for (const std::string& spec : args.pattern_specs) {
    patterns.push_back(ris::parse_pattern_source(spec, args.seed));
    for (std::size_t i = 0; i + 1 < patterns.size(); ++i) {
      if (patterns[i].id == patterns.back().id) {
        throw ris::BadPatternSpec("duplicate pattern id '" +
                                  patterns.back().id + "'");
      }
    }
  }

  ris::CampaignOptions options;
  if (args.fixed_clock) {
    const auto instant = ris::time_from_unix_seconds(*args.fixed_clock);
    options.clock = [instant] { return instant; };
  }

  ris::SimulatedRig rig(scene, config);
  const auto records =
      ris::run_campaign(rig.ports(), scene, plan, patterns, options);

  const std::filesystem::path out(args.out_dir);
  std::filesystem::create_directories(out);
  ris::write_file_atomic(out / "records.csv", ris::records_csv(records));
  ris::write_file_atomic(out / "manifest.json",
                         ris::manifest_json(scene, plan, config, patterns));

  for (const ris::NamedPattern& named : patterns) {
    const ris::PowerGrid grid =
        ris::sweep_grid_power(scene, plan, named.pattern, config);
    const std::string stem = sanitize_id(named.id);
    if (args.scenario == "3d") {
      ris::write_file_atomic(out / ("heatmap_" + stem + ".csv"),
                             ris::heatmap_csv(grid));
    } else {
      ris::write_file_atomic(out / ("polar_" + stem + ".csv"),
                             ris::polar_csv(grid.azimuths_deg, grid.power_dbm));
    }

    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.power_dbm.size(); ++i) {
      if (grid.power_dbm[i] > grid.power_dbm[best]) best = i;
    }
    const std::size_t n_az = grid.azimuths_deg.size();
    std::printf("%s: peak %s dBm at azimuth %s deg, elevation %s deg\n",
                named.id.c_str(), fixed(grid.power_dbm[best], 3).c_str(),
                fixed(grid.azimuths_deg[best % n_az], 1).c_str(),
                fixed(grid.elevations_deg[best / n_az], 1).c_str());
  }
  std::printf("%zu records -> %s\n", records.size(),
              (out / "records.csv").string().c_str());
  return exit_ok;
}

struct CodebookBuildArgs {
  std::string out_file;
  SceneFlags scene_flags;
  double az_start = 0.0, az_stop = 180.0, az_step = 1.8;
  double el_start = 0.0, el_stop = 0.0, el_step = 0.0;
  bool weighted = false;
};

int run_codebook_build(const CodebookBuildArgs& args) {
  const ris::Scene scene = args.scene_flags.build();
  ris::SweepPlan targets;
  targets.az_start_deg = args.az_start;
  targets.az_stop_deg = args.az_stop;
  targets.az_step_deg = args.az_step;
  targets.el_start_deg = args.el_start;
  targets.el_stop_deg = args.el_stop;
  targets.el_step_deg = args.el_step;
  targets.validate();

  const ris::Codebook book = ris::build_codebook(
      scene, targets, ris::SimConfig{},
      args.weighted ? ris::ProfileWeighting::amplitude
                    : ris::ProfileWeighting::uniform);
  ris::write_file_atomic(args.out_file, book.to_json());
  std::printf("%zu entries -> %s\n", book.size(), args.out_file.c_str());
  return exit_ok;
}

int run_codebook_query(const std::string& file, double azimuth,
                       double elevation) {
  const ris::Codebook book = ris::Codebook::from_json(ris::read_file(file));
  const ris::CodebookEntry& entry = book.nearest(ris::Pose{azimuth, elevation});
  const nlohmann::json out = {
      {"azimuth_deg", entry.pose.azimuth_deg},
      {"elevation_deg", entry.pose.elevation_deg},
      {"control_string", entry.control.str()},
      {"predicted_power_dbm", entry.predicted_power_dbm},
  };
  std::printf("%s\n", out.dump().c_str());
  return exit_ok;
}

int run_polar_svg(const std::string& records_file, const std::string& id,
                  const std::string& out_file) {
  const auto rows = ris::parse_records_csv(ris::read_file(records_file));
  std::vector<ris::RecordRow> selected;
  for (const ris::RecordRow& row : rows) {
    if (row.pattern_id == id) selected.push_back(row);
  }
  if (selected.empty()) {
    throw std::runtime_error("pattern id '" + id + "' not found in " +
                             records_file);
  }
  for (const ris::RecordRow& row : selected) {
    if (row.elevation_deg != selected.front().elevation_deg) {
      throw std::runtime_error(
          "records span several elevations; select a single-elevation sweep");
    }
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const ris::RecordRow& a, const ris::RecordRow& b) {
                     return a.azimuth_deg < b.azimuth_deg;
                   });
  ris::write_file_atomic(out_file, ris::polar_svg(selected));
  std::printf("%zu points -> %s\n", selected.size(), out_file.c_str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "risbench - RIS reflection bench: control-string codec, simulated "
      "sweep campaigns, steering codebooks.\n"
      "Endpoints for hardware rigs are reserved via RIG_ANALYZER, "
      "RIG_GENERATOR, RIG_RIS and RIG_POSITIONER (host:port)."};
  app.require_subcommand(1);

  std::string encode_source;
  std::uint64_t seed = 0;
  CLI::App* encode_cmd = app.add_subcommand(
      "encode", "print the control string for a pattern source");
  encode_cmd
      ->add_option("source", encode_source,
                   "builder spec (uniform:on, stripes:v:2, checker:4, "
                   "random:42) or grid file")
      ->required();
  encode_cmd->add_option("--seed", seed, "seed for a bare 'random' source");

  std::string decode_string;
  CLI::App* decode_cmd =
      app.add_subcommand("decode", "print the 16x16 grid of a control string");
  decode_cmd->add_option("control", decode_string, "!0X... control string")
      ->required();

  SimulateArgs sim;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "run a sweep campaign against the simulated rig");
  simulate_cmd->add_option("scenario", sim.scenario, "2d or 3d")
      ->required()
      ->check(CLI::IsMember({"2d", "3d"}));
  simulate_cmd
      ->add_option("--pattern", sim.pattern_specs,
                   "pattern source (repeatable)")
      ->required();
  simulate_cmd->add_option("--out", sim.out_dir, "output directory")
      ->required();
  sim.scene_flags.attach(*simulate_cmd);
  simulate_cmd->add_option("--offset", sim.power_offset,
                           "calibration offset in dB");
  simulate_cmd->add_option("--floor", sim.floor_dbm,
                           "reported noise floor in dBm");
  simulate_cmd->add_option("--q", sim.element_factor,
                           "cos^q element factor exponent");
  simulate_cmd->add_flag("--planar", sim.planar,
                         "plane-wave phases instead of spherical");
  simulate_cmd->add_option("--seed", sim.seed,
                           "seed for bare 'random' sources");
  simulate_cmd->add_option(
      "--fixed-clock", sim.fixed_clock,
      "freeze record timestamps to this unix time (for reproducible files)");

  CLI::App* codebook_cmd =
      app.add_subcommand("codebook", "build or query a steering codebook");
  codebook_cmd->require_subcommand(1);

  CodebookBuildArgs build;
  CLI::App* build_cmd = codebook_cmd->add_subcommand(
      "build", "optimize one pattern per target pose");
  build_cmd->add_option("--out", build.out_file, "output JSON file")
      ->required();
  build.scene_flags.attach(*build_cmd);
  build_cmd->add_option("--az-start", build.az_start, "first azimuth target");
  build_cmd->add_option("--az-stop", build.az_stop, "last azimuth target");
  build_cmd->add_option("--az-step", build.az_step, "azimuth target step");
  build_cmd->add_option("--el-start", build.el_start, "first elevation");
  build_cmd->add_option("--el-stop", build.el_stop, "last elevation");
  build_cmd->add_option("--el-step", build.el_step, "elevation step");
  build_cmd->add_flag("--weighted", build.weighted,
                      "amplitude-weighted binarization");

  std::string query_file;
  double query_az = 90.0;
  double query_el = 0.0;
  CLI::App* query_cmd = codebook_cmd->add_subcommand(
      "query", "print the entry nearest to a pose");
  query_cmd->add_option("--codebook", query_file, "codebook JSON file")
      ->required();
  query_cmd->add_option("--az", query_az, "azimuth in degrees")->required();
  query_cmd->add_option("--el", query_el, "elevation in degrees");

  std::string svg_records, svg_id, svg_out;
  CLI::App* svg_cmd = app.add_subcommand(
      "polar-svg", "render one pattern's 2D sweep as a polar SVG");
  svg_cmd->add_option("--records", svg_records, "records.csv path")
      ->required();
  svg_cmd->add_option("--pattern-id", svg_id, "pattern id to plot")
      ->required();
  svg_cmd->add_option("--out", svg_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*encode_cmd) return run_encode(encode_source, seed);
    if (*decode_cmd) return run_decode(decode_string);
    if (*simulate_cmd) return run_simulate(sim);
    if (*build_cmd) return run_codebook_build(build);
    if (*query_cmd) return run_codebook_query(query_file, query_az, query_el);
    if (*svg_cmd) return run_polar_svg(svg_records, svg_id, svg_out);
  } catch (const ris::BadPatternSpec& e) {
    std::fprintf(stderr, "risbench: %s\n", e.what());
    return exit_usage;
  } catch (const ris::MalformedControlString& e) {
    std::fprintf(stderr, "risbench: %s\n", e.what());
    return exit_usage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "risbench: %s\n", e.what());
    return exit_runtime;
  }
  return exit_usage;
}
