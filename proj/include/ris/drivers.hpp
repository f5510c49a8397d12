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

#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ris/pattern.hpp"

namespace ris {

enum class TraceMode { max_hold, clear_write };

/// Spectrum analyzer configuration. Defaults are the rig's bench settings:
/// zero span at the carrier, 500 Hz RBW, 50 ms sweeps, MaxHold trace.
struct AnalyzerSettings {
  double span_hz = 0.0;
  double rbw_hz = 500.0;
  double sweep_time_s = 0.05;
  double reference_level_dbm = -30.0;
  double center_frequency_hz = 5.5e9;
  TraceMode trace_mode = TraceMode::max_hold;
};

struct GeneratorSettings {
  double frequency_hz = 5.5e9;
  double level_dbm = -10.0;
  bool rf_enabled = true;
};

/// TCP endpoint of an instrument; lines are LF terminated.
struct DeviceEndpoint {
  std::string host;
  int port = 0;

  void validate() const;  // throws std::invalid_argument
};

/// Parses "host:port".
DeviceEndpoint parse_endpoint(std::string_view text);

/// Shortest exact decimal, never in exponent notation: 5.5e9 renders as
/// "5500000000", 0.05 as "0.05". parse(render(x)) == x.
std::string format_scpi_number(double value);

/// The canonical analyzer setup sequence, in order: center frequency, span,
/// RBW, sweep time, reference level, trace mode. Real instruments accept
/// several spellings of these mnemonics; this dialect is pinned by golden
/// tests so hardware adapters translate explicitly.
std::vector<std::string> analyzer_setup_commands(const AnalyzerSettings& s);

/// Generator setup: frequency, level, RF output state.
std::vector<std::string> generator_setup_commands(const GeneratorSettings& s);

/// Wire frame for the RIS controller: the 67-character control string plus
/// a single LF terminator, 68 bytes total.
std::string ris_frame(const RisPattern& pattern);

/// Line-oriented stream connection to one instrument. One transport, one
/// connection, one user at a time; any failure surfaces as an exception
/// which aborts the running campaign.
class Transport {
public:
  virtual ~Transport() = default;
  virtual void send_line(std::string_view line) = 0;
  virtual std::string query_line(std::string_view line) = 0;
};

class ScriptedResponseExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Test double: records every line sent (queries included, in order) and
/// answers queries from a scripted response queue.
class RecordingTransport final : public Transport {
public:
  void send_line(std::string_view line) override;
  std::string query_line(std::string_view line) override;

  void push_response(std::string response);
  const std::vector<std::string>& log() const noexcept { return log_; }

private:
  std::vector<std::string> log_;
  std::deque<std::string> responses_;
};

void send_analyzer_setup(Transport& transport, const AnalyzerSettings& s);
void send_generator_setup(Transport& transport, const GeneratorSettings& s);

}  // namespace ris
