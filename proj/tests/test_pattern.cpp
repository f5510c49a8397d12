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

#include <array>
#include <set>
#include <string>

#include "ris/pattern.hpp"

using namespace ris;

namespace {

std::string repeated(char c, int n) { return std::string(n, c); }

}  // namespace

TEST_CASE("uniform builders and their encodings") {
  CHECK(encode(uniform(PhaseBit::off)).str() == "!0X" + repeated('0', 64));
  CHECK(encode(uniform(PhaseBit::on)).str() == "!0X" + repeated('F', 64));
  CHECK(uniform(PhaseBit::off).count_ones() == 0);
  CHECK(uniform(PhaseBit::on).count_ones() == 256);
}

TEST_CASE("stripe builders") {
  CHECK(stripes(StripeOrientation::vertical, 16, PhaseBit::on) ==
        uniform(PhaseBit::on));

  const RisPattern alt = stripes(StripeOrientation::vertical, 1, PhaseBit::on);
  for (int c = 0; c < 16; ++c) {
    CHECK(alt.bit(0, c) == (c % 2 == 0 ? PhaseBit::on : PhaseBit::off));
  }

  const RisPattern rows2 =
      stripes(StripeOrientation::horizontal, 2, PhaseBit::on);
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      CHECK(rows2.bit(r, c) ==
            ((r / 2) % 2 == 0 ? PhaseBit::on : PhaseBit::off));
    }
  }

  CHECK_THROWS_AS(stripes(StripeOrientation::vertical, 0, PhaseBit::on),
                  std::invalid_argument);
  CHECK_THROWS_AS(stripes(StripeOrientation::vertical, 17, PhaseBit::on),
                  std::invalid_argument);
}

TEST_CASE("checkerboard builder") {
  CHECK(checkerboard(16) == uniform(PhaseBit::off));

  const RisPattern fine = checkerboard(1);
  CHECK(fine.bit(0, 0) == PhaseBit::off);
  CHECK(fine.bit(0, 1) == PhaseBit::on);
  CHECK(fine.bit(1, 0) == PhaseBit::on);

  const RisPattern quad = checkerboard(8);
  CHECK(quad.bit(0, 0) == PhaseBit::off);
  CHECK(quad.bit(0, 15) == PhaseBit::on);
  CHECK(quad.bit(15, 0) == PhaseBit::on);
  CHECK(quad.bit(15, 15) == PhaseBit::off);

  CHECK_THROWS_AS(checkerboard(0), std::invalid_argument);
  CHECK_THROWS_AS(checkerboard(17), std::invalid_argument);
}

TEST_CASE("random patterns are deterministic and seed-sensitive") {
  CHECK(random_pattern(7) == random_pattern(7));
  CHECK(random_pattern(1) != random_pattern(2));
  // Golden encoding, frozen from the documented mt19937_64 construction; a
  // change here means seeds no longer reproduce published experiments.
  CHECK(encode(random_pattern(42)).str() ==
        "!0X6B47A776BEFB8A831540A49D9DF1E9C550DE7A70FE69310372CB5851FC234744");

  double mean = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    mean += random_pattern(seed).count_ones();
  }
  mean /= 1000.0;
  CHECK(mean > 0.45 * 256);
  CHECK(mean < 0.55 * 256);
}

TEST_CASE("encoding matches the group digit semantics") {
  RisPattern first_only;
  first_only.set_bit(0, 0, PhaseBit::on);
  CHECK(encode(first_only).str() == "!0X8" + repeated('0', 63));

  RisPattern last_two;
  last_two.set_bit(0, 2, PhaseBit::on);
  last_two.set_bit(0, 3, PhaseBit::on);
  CHECK(encode(last_two).str() == "!0X3" + repeated('0', 63));
}

TEST_CASE("decoding") {
  CHECK(decode("!0X" + repeated('F', 64)) == uniform(PhaseBit::on));
  CHECK(decode("!0x" + repeated('f', 64)) == uniform(PhaseBit::on));

  const RisPattern p = decode("!0X3" + repeated('0', 63));
  CHECK(p.count_ones() == 2);
  CHECK(p.bit(0, 2) == PhaseBit::on);
  CHECK(p.bit(0, 3) == PhaseBit::on);

  SUBCASE("bad prefix") {
    try {
      decode("!0Y" + repeated('0', 64));
      FAIL("expected MalformedControlString");
    } catch (const MalformedControlString& e) {
      CHECK(e.position() == 2);
    }
  }
  SUBCASE("bad length") {
    CHECK_THROWS_AS(decode("!0X123"), MalformedControlString);
  }
  SUBCASE("bad digit reports its position") {
    try {
      decode("!0X" + repeated('0', 30) + "G" + repeated('0', 33));
      FAIL("expected MalformedControlString");
    } catch (const MalformedControlString& e) {
      CHECK(e.position() == 33);
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(uniform(PhaseBit::off)) == uniform(PhaseBit::on));
  const RisPattern p = random_pattern(7);
  CHECK(complement(complement(p)) == p);
  CHECK(p.count_ones() + complement(p).count_ones() == 256);
}

TEST_CASE("round-trip decode(encode(p)) == p for 1000 seeded patterns") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RisPattern p = random_pattern(seed);
    const ControlString s = encode(p);
    CHECK(s.str().size() == ControlString::length);
    CHECK(decode(s) == p);
  }
}

TEST_CASE("groups partition the 256 cells") {
  std::array<int, group_count> cells_per_group{};
  int total = 0;
  for (int r = 0; r < RisPattern::rows; ++r) {
    for (int c = 0; c < RisPattern::cols; ++c) {
      const GroupIndex g = group_of_cell(r, c);
      CHECK(g.row() == r);
      CHECK(c >= g.first_col());
      CHECK(c < g.first_col() + 4);
      ++cells_per_group[static_cast<std::size_t>(g.value)];
      ++total;
    }
  }
  CHECK(total == 256);
  for (const int count : cells_per_group) CHECK(count == 4);
  CHECK(GroupIndex(0).row() == 0);
  CHECK(GroupIndex(0).first_col() == 0);
  CHECK_THROWS_AS(GroupIndex(64), std::invalid_argument);
}

TEST_CASE("pattern space size") {
  CHECK(pattern_space_size(2, 256).str() ==
        "1157920892373161954235709850086879078532699846656405640394575840079"
        "13129639936");
  CHECK(pattern_space_size(2, 1) == 2);
  CHECK(pattern_space_size(3, 4) == 81);
  CHECK_THROWS_AS(pattern_space_size(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(pattern_space_size(2, 0), std::invalid_argument);
}

TEST_CASE("grid text form") {
  const RisPattern p = random_pattern(3);
  CHECK(parse_grid(format_grid(p)) == p);

  const std::string grid = format_grid(checkerboard(4));
  CHECK(grid.substr(0, 16) == "0000111100001111");

  SUBCASE("15 lines rejected") {
    std::string text;
    for (int i = 0; i < 15; ++i) text += std::string(16, '0') + "\n";
    CHECK_THROWS_AS(parse_grid(text), std::invalid_argument);
  }
  SUBCASE("short line rejected") {
    std::string text;
    for (int i = 0; i < 16; ++i) text += std::string(i == 7 ? 15 : 16, '0') + "\n";
    CHECK_THROWS_AS(parse_grid(text), std::invalid_argument);
  }
  SUBCASE("bad character rejected") {
    std::string text;
    for (int i = 0; i < 16; ++i) text += std::string(16, '0') + "\n";
    text[3] = 'x';
    CHECK_THROWS_AS(parse_grid(text), std::invalid_argument);
  }
  SUBCASE("crlf accepted") {
    std::string text;
    for (int i = 0; i < 16; ++i) text += std::string(16, '1') + "\r\n";
    CHECK(parse_grid(text) == uniform(PhaseBit::on));
  }
}
