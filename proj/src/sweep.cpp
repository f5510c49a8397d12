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

#include "ris/sweep.hpp"

#include <utility>

namespace ris {

namespace {

std::string pose_step(const char* what, const std::string& pattern_id,
                      const Pose& pose) {
  return std::string(what) + " (pattern " + pattern_id + ", azimuth " +
         std::to_string(pose.azimuth_deg) + ", elevation " +
         std::to_string(pose.elevation_deg) + ")";
}

}  // namespace

std::vector<MeasurementRecord> run_campaign(const InstrumentPorts& ports,
                                            const Scene& scene,
                                            const SweepPlan& plan,
                                            std::span<const NamedPattern> patterns,
                                            const CampaignOptions& options) {
  scene.validate();
  plan.validate();
  if (patterns.empty()) {
    throw std::invalid_argument("campaign needs at least one pattern");
  }

  const auto clock = options.clock
                         ? options.clock
                         : [] { return std::chrono::system_clock::now(); };

  std::vector<MeasurementRecord> records;
  records.reserve(patterns.size() * plan.pose_count());

  std::string step = "instrument setup";
  try {
    ports.source.set_frequency(scene.frequency_hz);
    ports.source.set_level(scene.tx_power_dbm);
    ports.source.rf_on();
    AnalyzerSettings analyzer = options.analyzer;
    analyzer.center_frequency_hz = scene.frequency_hz;
    ports.sensor.configure(analyzer);

    const auto elevations = plan.elevations();
    const auto azimuths = plan.azimuths();
    const std::size_t pose_count = plan.pose_count();
    std::uint64_t sequence = 0;

    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
      const NamedPattern& named = patterns[pi];
      const ControlString control = encode(named.pattern);
      std::size_t pose_index = 0;
      for (const double el : elevations) {
        for (const double az : azimuths) {
          const Pose pose{az, el};
          step = pose_step("apply pattern", named.id, pose);
          ports.ris.apply(control);
          step = pose_step("move", named.id, pose);
          ports.positioner.move_to(pose);
          if (options.settle) options.settle(plan.dwell);
          step = pose_step("read power", named.id, pose);
          const double power = ports.sensor.read_power_dbm();

          records.push_back(MeasurementRecord{named.id, control, az, el, power,
                                              sequence++, clock()});
          if (options.on_progress) {
            options.on_progress(
                ProgressEvent{pi, named.id, pose_index, pose_count, pose});
          }
          ++pose_index;
        }
      }
    }
  } catch (const std::exception& e) {
    throw CampaignAborted(step, std::move(records), e.what());
  }
  return records;
}

struct SimulatedRig::Impl {
  Scene scene;
  SimConfig config;

  std::optional<GeneratorSettings> generator_state;
  std::optional<AnalyzerSettings> analyzer_state;
  std::optional<Pose> pose;
  std::optional<RisPattern> pattern;

  struct Source final : SignalSource {
    Impl& rig;
    explicit Source(Impl& r) : rig(r) {}
    void set_frequency(double hz) override {
      state().frequency_hz = hz;
    }
    void set_level(double dbm) override { state().level_dbm = dbm; }
    void rf_on() override { state().rf_enabled = true; }
    void rf_off() override { state().rf_enabled = false; }
    GeneratorSettings& state() {
      if (!rig.generator_state) rig.generator_state.emplace();
      return *rig.generator_state;
    }
  };

  struct Sensor final : PowerSensor {
    Impl& rig;
    explicit Sensor(Impl& r) : rig(r) {}
    void configure(const AnalyzerSettings& settings) override {
      rig.analyzer_state = settings;
    }
    double read_power_dbm() override {
      if (!rig.analyzer_state) {
        throw RigNotReady("power sensor read before configure");
      }
      if (!rig.pose) throw RigNotReady("power sensor read before any move");
      if (!rig.pattern) {
        throw RigNotReady("power sensor read before a pattern was applied");
      }
      // Deterministic sensor: the MaxHold over any dwell window equals the
      // point value, so repeated reads return identical powers.
      return received_power(rig.scene, *rig.pose, *rig.pattern, rig.config)
          .power_dbm;
    }
  };

  struct Mover final : Positioner {
    Impl& rig;
    explicit Mover(Impl& r) : rig(r) {}
    void move_to(const Pose& pose) override { rig.pose = pose; }
    Pose current_pose() const override {
      if (!rig.pose) throw RigNotReady("positioner has not moved yet");
      return *rig.pose;
    }
  };

  struct Controller final : RisController {
    Impl& rig;
    explicit Controller(Impl& r) : rig(r) {}
    void apply(const ControlString& control) override {
      rig.pattern = decode(control);
    }
  };

  Source source{*this};
  Sensor sensor{*this};
  Mover mover{*this};
  Controller controller{*this};
};

SimulatedRig::SimulatedRig(Scene scene, SimConfig config)
    : impl_(std::make_unique<Impl>()) {
  scene.validate();
  config.validate();
  impl_->scene = scene;
  impl_->config = config;
}

SimulatedRig::~SimulatedRig() = default;

InstrumentPorts SimulatedRig::ports() {
  return InstrumentPorts{impl_->source, impl_->sensor, impl_->mover,
                         impl_->controller};
}

const std::optional<Pose>& SimulatedRig::pose() const { return impl_->pose; }

const std::optional<RisPattern>& SimulatedRig::pattern() const {
  return impl_->pattern;
}

const std::optional<GeneratorSettings>& SimulatedRig::generator() const {
  return impl_->generator_state;
}

}  // namespace ris
