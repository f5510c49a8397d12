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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ris/drivers.hpp"
#include "ris/fieldsim.hpp"
#include "ris/geometry.hpp"
#include "ris/pattern.hpp"
#include "ris/sweep_plan.hpp"

namespace ris {

struct MeasurementRecord {
  std::string pattern_id;
  ControlString control_string;
  double azimuth_deg;
  double elevation_deg;
  double power_dbm;
  std::uint64_t sequence;
  std::chrono::system_clock::time_point timestamp;
};

// Abstract instrument ports. Hardware adapters and the simulated rig both
// implement these; the campaign engine drives them strictly sequentially.

class SignalSource {
public:
  virtual ~SignalSource() = default;
  virtual void set_frequency(double hz) = 0;
  virtual void set_level(double dbm) = 0;
  virtual void rf_on() = 0;
  virtual void rf_off() = 0;
};

class PowerSensor {
public:
  virtual ~PowerSensor() = default;
  virtual void configure(const AnalyzerSettings& settings) = 0;
  /// Only valid after configure(). A MaxHold-style hardware sensor resets
  /// the trace, waits out the dwell window and reads the held maximum
  /// inside this call.
  virtual double read_power_dbm() = 0;
};

class Positioner {
public:
  virtual ~Positioner() = default;
  /// Blocking-complete: returns once the pose is reached.
  virtual void move_to(const Pose& pose) = 0;
  virtual Pose current_pose() const = 0;
};

class RisController {
public:
  virtual ~RisController() = default;
  virtual void apply(const ControlString& control) = 0;
};

struct InstrumentPorts {
  SignalSource& source;
  PowerSensor& sensor;
  Positioner& positioner;
  RisController& ris;
};

/// Raised by the simulated rig when a reading is requested before the
/// sensor is configured or before both a pose and a pattern are set.
class RigNotReady : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A port failure mid-campaign. Carries the records completed before the
/// failing step.
class CampaignAborted : public std::runtime_error {
public:
  CampaignAborted(std::string failing_step,
                  std::vector<MeasurementRecord> partial, const std::string& cause)
      : std::runtime_error("campaign aborted at " + failing_step + ": " + cause),
        failing_step_(std::move(failing_step)),
        partial_(std::move(partial)) {}

  const std::string& failing_step() const noexcept { return failing_step_; }
  const std::vector<MeasurementRecord>& partial_records() const noexcept {
    return partial_;
  }

private:
  std::string failing_step_;
  std::vector<MeasurementRecord> partial_;
};

struct NamedPattern {
  std::string id;
  RisPattern pattern;
};

struct ProgressEvent {
  std::size_t pattern_index;
  std::string pattern_id;
  std::size_t pose_index;  // within this pattern's sweep
  std::size_t pose_count;
  Pose pose;
};

struct CampaignOptions {
  /// Analyzer settings applied during setup; the centre frequency is
  /// overridden from the scene.
  AnalyzerSettings analyzer{};
  std::function<void(const ProgressEvent&)> on_progress;
  /// Timestamp source, injectable for reproducible record files.
  std::function<std::chrono::system_clock::time_point()> clock;
  /// Called with the plan's dwell after each move. Defaults to a no-op:
  /// the deterministic simulator needs no settling, and MaxHold hardware
  /// sensors own their dwell inside read_power_dbm(). A runner driving a
  /// slow positioner can install a real sleep here.
  std::function<void(std::chrono::milliseconds)> settle;
};

/// Runs a full measurement campaign: configures the instruments from the
/// scene, then for each pattern (outer), elevation (ascending) and azimuth
/// (ascending, innermost) applies the pattern, moves, settles and reads one
/// power value. Any port failure aborts with CampaignAborted carrying the
/// records completed so far.
std::vector<MeasurementRecord> run_campaign(
    const InstrumentPorts& ports, const Scene& scene, const SweepPlan& plan,
    std::span<const NamedPattern> patterns, const CampaignOptions& options = {});

/// Hardware-free backend: the positioner and controller store state, the
/// sensor replays fieldsim::received_power for the stored pose and pattern.
class SimulatedRig {
public:
  explicit SimulatedRig(Scene scene, SimConfig config = {});
  ~SimulatedRig();
  SimulatedRig(SimulatedRig&&) = delete;

  InstrumentPorts ports();

  const std::optional<Pose>& pose() const;
  const std::optional<RisPattern>& pattern() const;
  const std::optional<GeneratorSettings>& generator() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ris
