// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irs/geometry.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "irs/errors.hpp"
#include "irs/rng.hpp"

namespace irs {
namespace {

constexpr double kPi = std::numbers::pi;

Scene paper_scene() { return Scene::from_polar(60.0, kPi / 4, 1.0, 1.0, 64); }

TEST(PolarToCartesianTest, ZeroRadiusIsOrigin) {
  const Point2D p = polar_to_cartesian(0.0, 1.23);
  EXPECT_EQ(p.x, 0.0);
  EXPECT_EQ(p.y, 0.0);
}

TEST(PolarToCartesianTest, UnitXAxis) {
  const Point2D p = polar_to_cartesian(1.0, 0.0);
  EXPECT_EQ(p.x, 1.0);
  EXPECT_EQ(p.y, 0.0);
}

TEST(PolarToCartesianTest, ReferenceTargetPosition) {
  const Point2D p = polar_to_cartesian(60.0, kPi / 4);
  EXPECT_NEAR(p.x, 60.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p.y, 42.42640687119285, 1e-12);
}

TEST(PolarToCartesianTest, RejectsNegativeRadius) {
  EXPECT_THROW(polar_to_cartesian(-1.0, 0.0), InvalidArgument);
}

TEST(WrapAngleTest, MapsOntoHalfOpenCircle) {
  EXPECT_EQ(wrap_angle(0.0), 0.0);
  EXPECT_NEAR(wrap_angle(-kPi / 2), 1.5 * kPi, 1e-15);
  EXPECT_NEAR(wrap_angle(2 * kPi + 0.5), 0.5, 1e-14);
  EXPECT_LT(wrap_angle(12 * (kPi / 6)), 2 * kPi);
}

TEST(CandidateGridTest, ReferenceGridHas1200Cells) {
  GridSpec spec{100, 1.0, 12, kPi / 6};
  const CandidateSet grid = build_candidate_grid(spec, paper_scene());
  EXPECT_EQ(grid.size(), 1200u);
}

TEST(CandidateGridTest, SingletonGrid) {
  GridSpec spec{1, 5.0, 1, kPi};
  const CandidateSet grid = build_candidate_grid(spec, paper_scene());
  ASSERT_EQ(grid.size(), 1u);
  EXPECT_EQ(grid[0].range, 5.0);
  EXPECT_EQ(grid[0].azimuth, kPi);
  EXPECT_NEAR(grid[0].position.x, -5.0, 1e-12);
  EXPECT_NEAR(grid[0].position.y, 0.0, 1e-12);
}

TEST(CandidateGridTest, TwoByTwoIsRangeMajor) {
  GridSpec spec{2, 1.0, 2, kPi / 2};
  const CandidateSet grid = build_candidate_grid(spec, paper_scene());
  ASSERT_EQ(grid.size(), 4u);
  const std::pair<double, double> expected[] = {
      {1.0, kPi / 2}, {1.0, kPi}, {2.0, kPi / 2}, {2.0, kPi}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(grid[i].index, static_cast<int>(i));
    EXPECT_EQ(grid[i].range, expected[i].first);
    EXPECT_NEAR(grid[i].azimuth, expected[i].second, 1e-15);
  }
}

TEST(CandidateGridTest, FullCircleDoesNotDuplicateZero) {
  GridSpec spec{1, 1.0, 12, kPi / 6};
  const CandidateSet grid = build_candidate_grid(spec, paper_scene());
  std::set<double> azimuths;
  for (const Candidate& c : grid) azimuths.insert(c.azimuth);
  EXPECT_EQ(azimuths.size(), 12u);
  EXPECT_EQ(grid.back().azimuth, 0.0);
}

TEST(CandidateGridTest, RejectsInvalidSpecs) {
  const Scene scene = paper_scene();
  EXPECT_THROW(build_candidate_grid({0, 1.0, 1, 1.0}, scene), InvalidArgument);
  EXPECT_THROW(build_candidate_grid({1, 0.0, 1, 1.0}, scene), InvalidArgument);
  EXPECT_THROW(build_candidate_grid({1, 1.0, 0, 1.0}, scene), InvalidArgument);
  EXPECT_THROW(build_candidate_grid({1, 1.0, 1, -0.1}, scene), InvalidArgument);
  // 13 * pi/6 wraps past the full circle.
  EXPECT_THROW(build_candidate_grid({1, 1.0, 13, kPi / 6}, scene),
               InvalidArgument);
}

TEST(CandidateGridTest, DropsCellOnTopOfTarget) {
  const Scene scene = Scene::from_polar(2.0, kPi / 2, 1.0, 1.0, 1);
  GridSpec spec{3, 1.0, 4, kPi / 2};
  const CandidateSet grid = build_candidate_grid(spec, scene);
  ASSERT_EQ(grid.size(), 11u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(grid[i].index, static_cast<int>(i));
    EXPECT_GT(grid[i].irs_target_distance, 1e-6);
  }
}

TEST(CandidateGridTest, GeometryInvariantsHoldOnRandomGrids) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    GridSpec spec;
    spec.range_count = 1 + static_cast<int>(rng.below(20));
    spec.azimuth_count = 1 + static_cast<int>(rng.below(24));
    spec.range_step = 0.1 + 3.0 * rng.uniform();
    spec.azimuth_step = 2 * kPi / spec.azimuth_count * (0.2 + 0.8 * rng.uniform());
    const Scene scene =
        Scene::from_polar(1.0 + 50.0 * rng.uniform(), 2 * kPi * rng.uniform(),
                          1.0, 1.0, 1);
    const CandidateSet grid = build_candidate_grid(spec, scene);
    ASSERT_EQ(static_cast<int>(grid.size()), spec.size());
    for (const Candidate& c : grid) {
      EXPECT_EQ(c.radar_irs_distance, c.range);
      EXPECT_EQ(c.radar_irs_angle, c.azimuth);
      const PolarPoint back = cartesian_to_polar(c.position);
      EXPECT_NEAR(back.range, c.range, 1e-10 * c.range);
      const double dtheta = std::remainder(back.azimuth - c.azimuth, 2 * kPi);
      EXPECT_NEAR(dtheta, 0.0, 1e-10 * std::max(1.0, c.azimuth));
      const double dtr = scene.target_range;
      EXPECT_GE(c.irs_target_distance, std::abs(dtr - c.range) - 1e-9);
      EXPECT_LE(c.irs_target_distance, dtr + c.range + 1e-9);
    }
  }
}

TEST(SceneAnglesTest, UnitOffsetOnXAxis) {
  Scene scene = Scene::from_polar(1.0, 0.0, 1.0, 1.0, 1);
  const TargetBearing b = scene_angles({0.0, 0.0}, scene);
  EXPECT_EQ(b.angle, 0.0);
  EXPECT_EQ(b.distance, 1.0);
}

TEST(SceneAnglesTest, UnitOffsetOnYAxis) {
  Scene scene;
  scene.target_position = {1.0, 2.0};
  const TargetBearing b = scene_angles({1.0, 1.0}, scene);
  EXPECT_NEAR(b.angle, kPi / 2, 1e-15);
  EXPECT_EQ(b.distance, 1.0);
}

TEST(SceneAnglesTest, IrsBelowReferenceTarget) {
  const Scene scene = paper_scene();
  const TargetBearing b = scene_angles({scene.target_position.x, 0.0}, scene);
  EXPECT_NEAR(b.angle, kPi / 2, 1e-15);
  EXPECT_NEAR(b.distance, 42.42640687119285, 1e-12);
}

TEST(SceneAnglesTest, RejectsIrsOnTarget) {
  const Scene scene = paper_scene();
  EXPECT_THROW(scene_angles(scene.target_position, scene), InvalidArgument);
}

TEST(SceneTest, ValidatesPhysicalConstants) {
  EXPECT_NO_THROW(paper_scene().validate());
  EXPECT_THROW(Scene::from_polar(0.0, 0.0, 1.0, 1.0, 1).validate(),
               InvalidArgument);
  EXPECT_THROW(Scene::from_polar(1.0, 0.0, 0.0, 1.0, 1).validate(),
               InvalidArgument);
  EXPECT_THROW(Scene::from_polar(1.0, 0.0, 1.0, -1.0, 1).validate(),
               InvalidArgument);
  EXPECT_THROW(Scene::from_polar(1.0, 0.0, 1.0, 1.0, 0).validate(),
               InvalidArgument);
  Scene inconsistent = paper_scene();
  inconsistent.target_range = 61.0;
  EXPECT_THROW(inconsistent.validate(), InvalidArgument);
}

}  // namespace
}  // namespace irs
