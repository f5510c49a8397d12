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

#include "ris/pattern.hpp"

#include <cctype>
#include <random>
#include <sstream>

namespace ris {

namespace {

constexpr std::string_view hex_digits = "0123456789ABCDEF";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

// Shared by ControlString and decode(). Returns the normalised uppercase
// text or throws with the offending position.
std::string validate_control_string(std::string_view text) {
  const auto prefix = ControlString::prefix;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const char got =
        i < text.size()
            ? static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])))
            : '\0';
    if (got != prefix[i]) {
      throw MalformedControlString("control string must start with \"!0X\"", i);
    }
  }
  if (text.size() != ControlString::length) {
    throw MalformedControlString(
        "control string must be 67 characters, got " +
            std::to_string(text.size()),
        std::min(text.size(), ControlString::length));
  }
  std::string out(text);
  for (std::size_t i = 0; i < prefix.size(); ++i) out[i] = prefix[i];
  for (std::size_t i = prefix.size(); i < out.size(); ++i) {
    if (hex_value(out[i]) < 0) {
      throw MalformedControlString(
          std::string("invalid hex digit '") + out[i] + "' at position " +
              std::to_string(i),
          i);
    }
    out[i] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i])));
  }
  return out;
}

}  // namespace

std::size_t RisPattern::index(int row, int col) {
  if (row < 0 || row >= rows || col < 0 || col >= cols) {
    throw std::out_of_range("pattern cell (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  }
  return static_cast<std::size_t>(row) * cols + col;
}

GroupIndex::GroupIndex(int v) : value(v) {
  if (v < 0 || v >= group_count) {
    throw std::invalid_argument("group index " + std::to_string(v) +
                                " outside 0..63");
  }
}

GroupIndex group_of_cell(int row, int col) {
  if (row < 0 || row >= RisPattern::rows || col < 0 ||
      col >= RisPattern::cols) {
    throw std::out_of_range("cell (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
  }
  return GroupIndex(row * 4 + col / 4);
}

ControlString::ControlString(std::string text)
    : text_(validate_control_string(text)) {}

RisPattern uniform(PhaseBit state) {
  RisPattern p;
  if (state == PhaseBit::on) {
    for (int r = 0; r < RisPattern::rows; ++r)
      for (int c = 0; c < RisPattern::cols; ++c) p.set_bit(r, c, PhaseBit::on);
  }
  return p;
}

RisPattern stripes(StripeOrientation orientation, int band_width,
                   PhaseBit first_band) {
  if (band_width < 1 || band_width > 16) {
    throw std::invalid_argument("stripe band width " +
                                std::to_string(band_width) +
                                " outside 1..16");
  }
  RisPattern p;
  for (int r = 0; r < RisPattern::rows; ++r) {
    for (int c = 0; c < RisPattern::cols; ++c) {
      const int band =
          (orientation == StripeOrientation::vertical ? c : r) / band_width;
      const bool first = band % 2 == 0;
      const bool on = (first_band == PhaseBit::on) == first;
      p.set_bit(r, c, on ? PhaseBit::on : PhaseBit::off);
    }
  }
  return p;
}

RisPattern checkerboard(int block) {
  if (block < 1 || block > 16) {
    throw std::invalid_argument("checkerboard block " + std::to_string(block) +
                                " outside 1..16");
  }
  RisPattern p;
  for (int r = 0; r < RisPattern::rows; ++r) {
    for (int c = 0; c < RisPattern::cols; ++c) {
      const bool on = (r / block + c / block) % 2 == 1;
      p.set_bit(r, c, on ? PhaseBit::on : PhaseBit::off);
    }
  }
  return p;
}

RisPattern random_pattern(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RisPattern p;
  for (int word = 0; word < RisPattern::element_count / 64; ++word) {
    const std::uint64_t bits = gen();
    for (int b = 0; b < 64; ++b) {
      if ((bits >> b) & 1u) {
        const int n = word * 64 + b;
        p.set_bit(n / RisPattern::cols, n % RisPattern::cols, PhaseBit::on);
      }
    }
  }
  return p;
}

RisPattern complement(const RisPattern& pattern) {
  RisPattern p;
  for (int r = 0; r < RisPattern::rows; ++r) {
    for (int c = 0; c < RisPattern::cols; ++c) {
      p.set_bit(r, c, pattern.bit(r, c) == PhaseBit::on ? PhaseBit::off
                                                        : PhaseBit::on);
    }
  }
  return p;
}

ControlString encode(const RisPattern& pattern) {
  std::string text(ControlString::prefix);
  text.reserve(ControlString::length);
  for (int g = 0; g < group_count; ++g) {
    const GroupIndex group(g);
    int digit = 0;
    for (int i = 0; i < 4; ++i) {
      digit <<= 1;
      if (pattern.bit(group.row(), group.first_col() + i) == PhaseBit::on) {
        digit |= 1;
      }
    }
    text.push_back(hex_digits[static_cast<std::size_t>(digit)]);
  }
  return ControlString(std::move(text));
}

RisPattern decode(std::string_view control_string) {
  const std::string text = validate_control_string(control_string);
  RisPattern p;
  for (int g = 0; g < group_count; ++g) {
    const GroupIndex group(g);
    const int digit = hex_value(text[ControlString::prefix.size() + g]);
    for (int i = 0; i < 4; ++i) {
      if ((digit >> (3 - i)) & 1) {
        p.set_bit(group.row(), group.first_col() + i, PhaseBit::on);
      }
    }
  }
  return p;
}

RisPattern decode(const ControlString& control_string) {
  return decode(std::string_view(control_string.str()));
}

boost::multiprecision::cpp_int pattern_space_size(unsigned states_per_element,
                                                  unsigned elements) {
  if (states_per_element < 2) {
    throw std::invalid_argument("need at least two states per element");
  }
  if (elements < 1) {
    throw std::invalid_argument("need at least one element");
  }
  return boost::multiprecision::pow(
      boost::multiprecision::cpp_int(states_per_element), elements);
}

std::string format_grid(const RisPattern& pattern) {
  std::string out;
  out.reserve((RisPattern::cols + 1) * RisPattern::rows);
  for (int r = 0; r < RisPattern::rows; ++r) {
    for (int c = 0; c < RisPattern::cols; ++c) {
      out.push_back(pattern.bit(r, c) == PhaseBit::on ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

RisPattern parse_grid(std::string_view text) {
  RisPattern p;
  int row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      if (row >= RisPattern::rows) {
        throw std::invalid_argument("grid has more than 16 lines");
      }
      if (line.size() != RisPattern::cols) {
        throw std::invalid_argument(
            "grid line " + std::to_string(row + 1) + " has " +
            std::to_string(line.size()) + " characters, expected 16");
      }
      for (int c = 0; c < RisPattern::cols; ++c) {
        if (line[c] != '0' && line[c] != '1') {
          throw std::invalid_argument("grid line " + std::to_string(row + 1) +
                                      " contains '" + line[c] +
                                      "', expected '0' or '1'");
        }
        if (line[c] == '1') p.set_bit(row, c, PhaseBit::on);
      }
      ++row;
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (row != RisPattern::rows) {
    throw std::invalid_argument("grid has " + std::to_string(row) +
                                " lines, expected 16");
  }
  return p;
}

}  // namespace ris
