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

#include "ris/drivers.hpp"

#include <charconv>

namespace ris {

void DeviceEndpoint::validate() const {
  if (host.empty()) throw std::invalid_argument("endpoint host is empty");
  if (port < 1 || port > 65535) {
    throw std::invalid_argument("endpoint port " + std::to_string(port) +
                                " outside 1..65535");
  }
}

DeviceEndpoint parse_endpoint(std::string_view text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("endpoint '" + std::string(text) +
                                "' must be host:port");
  }
  DeviceEndpoint ep;
  ep.host = std::string(text.substr(0, colon));
  const std::string_view port_text = text.substr(colon + 1);
  const auto res = std::from_chars(
      port_text.data(), port_text.data() + port_text.size(), ep.port);
  if (res.ec != std::errc{} || res.ptr != port_text.data() + port_text.size()) {
    throw std::invalid_argument("endpoint '" + std::string(text) +
                                "' has a malformed port");
  }
  ep.validate();
  return ep;
}

std::string format_scpi_number(double value) {
  char buf[352];  // fixed notation of any finite double fits
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::vector<std::string> analyzer_setup_commands(const AnalyzerSettings& s) {
  return {
      "FREQ:CENT " + format_scpi_number(s.center_frequency_hz),
      "FREQ:SPAN " + format_scpi_number(s.span_hz),
      "BAND:RES " + format_scpi_number(s.rbw_hz),
      "SWE:TIME " + format_scpi_number(s.sweep_time_s),
      "DISP:TRAC:Y:RLEV " + format_scpi_number(s.reference_level_dbm),
      std::string("DISP:TRAC:MODE ") +
          (s.trace_mode == TraceMode::max_hold ? "MAXH" : "WRIT"),
  };
}

std::vector<std::string> generator_setup_commands(const GeneratorSettings& s) {
  return {
      "FREQ " + format_scpi_number(s.frequency_hz),
      "POW " + format_scpi_number(s.level_dbm),
      s.rf_enabled ? "OUTP ON" : "OUTP OFF",
  };
}

std::string ris_frame(const RisPattern& pattern) {
  return encode(pattern).str() + "\n";
}

void RecordingTransport::send_line(std::string_view line) {
  log_.emplace_back(line);
}

std::string RecordingTransport::query_line(std::string_view line) {
  log_.emplace_back(line);
  if (responses_.empty()) {
    throw ScriptedResponseExhausted("no scripted response for query '" +
                                    std::string(line) + "'");
  }
  std::string response = std::move(responses_.front());
  responses_.pop_front();
  return response;
}

void RecordingTransport::push_response(std::string response) {
  responses_.push_back(std::move(response));
}

void send_analyzer_setup(Transport& transport, const AnalyzerSettings& s) {
  for (const std::string& line : analyzer_setup_commands(s)) {
    transport.send_line(line);
  }
}

void send_generator_setup(Transport& transport, const GeneratorSettings& s) {
  for (const std::string& line : generator_setup_commands(s)) {
    transport.send_line(line);
  }
}

}  // namespace ris
