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

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ris {

/// Per-element reflection state of a 1-bit RIS cell. `on` means the element
/// adds a 180 degree phase shift to the reflected signal; `off` reflects
/// with no added shift. Whether `on` corresponds to the "active" state of
/// the physical element is a hardware question; this library only fixes the
/// phase semantics.
enum class PhaseBit : std::uint8_t { off = 0, on = 1 };

enum class StripeOrientation { horizontal, vertical };

/// Thrown when a control string fails validation. `position()` is the
/// zero-based index of the first offending character (or the string length
/// when the string is truncated).
class MalformedControlString : public std::runtime_error {
public:
  MalformedControlString(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A 16x16 grid of 1-bit phase states. Row-major, (row 0, col 0) at the top
/// left. A plain value: cheap to copy, safe to share between tasks once
/// built.
class RisPattern {
public:
  static constexpr int rows = 16;
  static constexpr int cols = 16;
  static constexpr int element_count = rows * cols;

  RisPattern() = default;  // all elements off

  PhaseBit bit(int row, int col) const {
    return bits_.test(index(row, col)) ? PhaseBit::on : PhaseBit::off;
  }

  void set_bit(int row, int col, PhaseBit value) {
    bits_.set(index(row, col), value == PhaseBit::on);
  }

  int count_ones() const { return static_cast<int>(bits_.count()); }

  bool operator==(const RisPattern&) const = default;

private:
  static std::size_t index(int row, int col);

  std::bitset<element_count> bits_;
};

/// Identifies one of the 64 control groups. A group is four horizontally
/// consecutive elements; group 0 is the top-left quad and groups are
/// numbered row-major, four per row.
struct GroupIndex {
  explicit GroupIndex(int value);

  int value;
  int row() const { return value / 4; }
  int first_col() const { return 4 * (value % 4); }
};

constexpr int group_count = 64;

GroupIndex group_of_cell(int row, int col);

/// The validated wire encoding of a pattern: the literal prefix "!0X"
/// followed by 64 uppercase hex digits, one per group. Within a digit the
/// most significant bit is the leftmost element of the group. Lowercase hex
/// is accepted on input and normalised to uppercase.
class ControlString {
public:
  static constexpr std::size_t length = 67;
  static constexpr std::string_view prefix = "!0X";

  /// Validates and normalises; throws MalformedControlString otherwise.
  explicit ControlString(std::string text);

  const std::string& str() const noexcept { return text_; }

  bool operator==(const ControlString&) const = default;

private:
  std::string text_;
};

// Canonical builders. All are deterministic and platform independent.

/// All 256 elements set to `state`.
RisPattern uniform(PhaseBit state);

/// Bands of `band_width` columns (vertical) or rows (horizontal) with
/// alternating state, the first band carrying `first_band`.
/// `band_width` must be in [1, 16].
RisPattern stripes(StripeOrientation orientation, int band_width,
                   PhaseBit first_band);

/// bit(r, c) = parity of (r / block + c / block). `block` must be in [1, 16].
RisPattern checkerboard(int block);

/// Seeded pseudo-random pattern. Bits come from std::mt19937_64 seeded with
/// `seed`: four consecutive 64-bit outputs, element n (row-major) taking bit
/// n % 64 (least significant first) of output n / 64. The engine is fully
/// specified by the C++ standard, so a seed reproduces the same pattern on
/// every platform.
RisPattern random_pattern(std::uint64_t seed);

RisPattern complement(const RisPattern& pattern);

ControlString encode(const RisPattern& pattern);

RisPattern decode(std::string_view control_string);
RisPattern decode(const ControlString& control_string);

/// Exact M^N as an arbitrary-precision integer. Requires M >= 2, N >= 1.
boost::multiprecision::cpp_int pattern_space_size(unsigned states_per_element,
                                                  unsigned elements);

/// Plain-text grid form: 16 lines of 16 '0'/'1' characters, '\n' terminated.
std::string format_grid(const RisPattern& pattern);

/// Parses the grid form. CR characters are ignored; anything else that is
/// not exactly 16 lines of 16 '0'/'1' characters is rejected with a
/// diagnostic naming the offending line.
RisPattern parse_grid(std::string_view text);

}  // namespace ris
