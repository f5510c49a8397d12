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
#include <random>

#include "ris/codebook.hpp"

using namespace ris;

namespace {

PhaseProfile random_profile(std::mt19937_64& rng, std::size_t n,
                            bool weighted = false) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi * (1.0 - 1e-12));
  std::uniform_real_distribution<double> weight(0.25, 2.0);
  PhaseProfile profile;
  for (std::size_t i = 0; i < n; ++i) profile.phases.push_back(angle(rng));
  if (weighted) {
    for (std::size_t i = 0; i < n; ++i) profile.weights.push_back(weight(rng));
  }
  return profile;
}

double evaluate_signs(const PhaseProfile& profile,
                      const std::vector<std::int8_t>& signs) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < profile.phases.size(); ++i) {
    const double w = profile.weights.empty() ? 1.0 : profile.weights[i];
    re += signs[i] * w * std::cos(profile.phases[i]);
    im += signs[i] * w * std::sin(profile.phases[i]);
  }
  return std::hypot(re, im);
}

}  // namespace

TEST_CASE("phase profile basics") {
  Scene one;
  one.rows = one.cols = 1;
  const PhaseProfile p = phase_profile(one, Pose{90.0, 0.0});
  REQUIRE(p.phases.size() == 1);
  CHECK(p.phases[0] >= 0.0);
  CHECK(p.phases[0] < 2.0 * pi);
}

TEST_CASE("mirror elements share a phase at the specular pose") {
  const Scene scene;
  const PhaseProfile p = phase_profile(scene, Pose{90.0, 0.0});
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      const std::size_t i = static_cast<std::size_t>(r * 16 + c);
      const std::size_t j = static_cast<std::size_t>(r * 16 + 15 - c);
      CHECK(std::fabs(p.phases[i] - p.phases[j]) < 1e-9);
    }
  }
}

TEST_CASE("doubling the frequency doubles the unreduced phase") {
  Scene one;
  one.rows = one.cols = 1;
  Scene two = one;
  two.frequency_hz *= 2.0;
  const Pose pose{77.0, 0.0};
  const PathLengths paths = path_lengths(one, pose);
  const double unreduced_one = one.wavenumber() * (paths.to_tx[0] + paths.to_rx[0]);
  const double unreduced_two = two.wavenumber() * (paths.to_tx[0] + paths.to_rx[0]);
  CHECK(unreduced_two == doctest::Approx(2.0 * unreduced_one).epsilon(1e-12));
}

TEST_CASE("binarize handles the aligned and anti-aligned corner cases") {
  SUBCASE("all phases equal") {
    PhaseProfile p;
    p.phases.assign(5, 1.234);
    const BinarizeResult b = binarize(p);
    CHECK(b.magnitude == doctest::Approx(5.0).epsilon(1e-12));
    for (std::size_t i = 1; i < b.signs.size(); ++i) {
      CHECK(b.signs[i] == b.signs[0]);
    }
  }
  SUBCASE("anti-aligned pair") {
    PhaseProfile p;
    p.phases = {0.0, pi};
    const BinarizeResult b = binarize(p);
    CHECK(b.magnitude == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.signs[0] != b.signs[1]);
  }
  SUBCASE("duplicated antipodal pairs") {
    PhaseProfile p;
    p.phases = {0.0, 0.0, pi, pi};
    CHECK(binarize(p).magnitude == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("empty profile rejected") {
    CHECK_THROWS_AS(binarize(PhaseProfile{}), std::invalid_argument);
  }
}

TEST_CASE("binarize matches the exhaustive oracle on random profiles") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const PhaseProfile profile = random_profile(rng, n);
    const BinarizeResult fast = binarize(profile);
    const BinarizeResult brute = exhaustive_optimum(profile);
    CHECK(std::fabs(fast.magnitude - brute.magnitude) < 1e-9);
    // the reported magnitude matches its own sign vector
    CHECK(std::fabs(evaluate_signs(profile, fast.signs) - fast.magnitude) <
          1e-9);
  }
}

TEST_CASE("binarize stays exact with amplitude weights") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const PhaseProfile profile = random_profile(rng, n, /*weighted=*/true);
    const BinarizeResult fast = binarize(profile);
    const BinarizeResult brute = exhaustive_optimum(profile);
    CHECK(std::fabs(fast.magnitude - brute.magnitude) < 1e-9);
  }
}

TEST_CASE("complement degeneracy: flipping every sign preserves magnitude") {
  std::mt19937_64 rng(9);
  const PhaseProfile profile = random_profile(rng, 12);
  const BinarizeResult b = binarize(profile);
  std::vector<std::int8_t> flipped;
  for (const std::int8_t s : b.signs) flipped.push_back(-s);
  CHECK(evaluate_signs(profile, b.signs) ==
        evaluate_signs(profile, flipped));
}

TEST_CASE("exhaustive oracle") {
  PhaseProfile one;
  one.phases = {0.3};
  CHECK(exhaustive_optimum(one).magnitude == doctest::Approx(1.0));

  PhaseProfile pair;
  pair.phases = {0.0, pi};
  CHECK(exhaustive_optimum(pair).magnitude == doctest::Approx(2.0));

  std::mt19937_64 rng(13);
  const PhaseProfile profile = random_profile(rng, 10);
  const double best = exhaustive_optimum(profile).magnitude;
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int8_t> signs;
    for (std::size_t i = 0; i < profile.phases.size(); ++i) {
      signs.push_back(flip(rng) ? -1 : 1);
    }
    CHECK(evaluate_signs(profile, signs) <= best + 1e-12);
  }

  PhaseProfile large;
  large.phases.assign(21, 0.0);
  CHECK_THROWS_AS(exhaustive_optimum(large), std::invalid_argument);
}

TEST_CASE("codebook construction and dominance") {
  const Scene scene;
  SweepPlan targets = plan_2d();
  targets.az_step_deg = 18.0;  // 11 targets keeps this test quick
  const Codebook book = build_codebook(scene, targets);
  REQUIRE(book.size() == 11);

  std::mt19937_64 rng(31);
  for (const CodebookEntry& entry : book.entries()) {
    // the stored prediction reproduces under the simulator
    const double replay =
        received_power(scene, entry.pose, entry.pattern).power_dbm;
    CHECK(std::fabs(replay - entry.predicted_power_dbm) < 1e-9);

    // dominance over the all-on plate and over random patterns
    const double uni =
        received_power(scene, entry.pose, uniform(PhaseBit::on)).power_dbm;
    CHECK(entry.predicted_power_dbm >= uni - 1e-9);
    for (int t = 0; t < 50; ++t) {
      const double rnd =
          received_power(scene, entry.pose, random_pattern(rng())).power_dbm;
      CHECK(entry.predicted_power_dbm >= rnd - 1e-9);
    }
  }

  SUBCASE("single-target build") {
    SweepPlan single = plan_2d();
    single.az_start_deg = single.az_stop_deg = 90.0;
    single.az_step_deg = 1.0;
    const Codebook tiny = build_codebook(scene, single);
    CHECK(tiny.size() == 1);
    // spherical wavefront: the optimized pattern beats all-on even at the
    // specular pose
    const double uni =
        received_power(scene, Pose{90.0, 0.0}, uniform(PhaseBit::on)).power_dbm;
    CHECK(tiny.entries()[0].predicted_power_dbm > uni);
  }
}

TEST_CASE("codebook lookup and JSON round-trip") {
  const Scene scene;
  SweepPlan targets = plan_2d();
  targets.az_step_deg = 10.0;  // 19 targets
  const Codebook book = build_codebook(scene, targets);

  CHECK(book.nearest(Pose{90.0, 0.0}).pose.azimuth_deg == 90.0);
  CHECK(book.nearest(Pose{89.0, 0.0}).pose.azimuth_deg == 90.0);
  CHECK(book.nearest(Pose{94.0, 0.0}).pose.azimuth_deg == 90.0);
  CHECK(book.nearest(Pose{96.0, 0.0}).pose.azimuth_deg == 100.0);

  const Codebook back = Codebook::from_json(book.to_json());
  REQUIRE(back.size() == book.size());
  for (std::size_t i = 0; i < book.size(); ++i) {
    CHECK(back.entries()[i].pose.azimuth_deg ==
          book.entries()[i].pose.azimuth_deg);
    CHECK(back.entries()[i].control == book.entries()[i].control);
    CHECK(back.entries()[i].predicted_power_dbm ==
          book.entries()[i].predicted_power_dbm);
    CHECK(back.entries()[i].pattern == book.entries()[i].pattern);
  }

  // entries are sorted by (elevation, azimuth)
  for (std::size_t i = 1; i < book.size(); ++i) {
    CHECK(book.entries()[i - 1].pose.azimuth_deg <
          book.entries()[i].pose.azimuth_deg);
  }
}

TEST_CASE("amplitude weighting is available and also dominates uniform") {
  const Scene scene;
  SweepPlan single = plan_2d();
  single.az_start_deg = single.az_stop_deg = 54.0;
  const Codebook book =
      build_codebook(scene, single, SimConfig{}, ProfileWeighting::amplitude);
  const double uni =
      received_power(scene, Pose{54.0, 0.0}, uniform(PhaseBit::on)).power_dbm;
  CHECK(book.entries()[0].predicted_power_dbm >= uni - 1e-9);
}
