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
#include <string>

#include "irs/errors.hpp"

namespace irs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTargetExclusionRadius = 1e-6;
constexpr double kCoincidenceTolerance = 1e-9;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

double wrap_angle(double theta) {
  double wrapped = std::fmod(theta, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a value just below a multiple of 2*pi can round up to 2*pi.
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

Point2D polar_to_cartesian(double r, double theta) {
  if (!(r >= 0.0)) {
    throw InvalidArgument("polar_to_cartesian: negative radius");
  }
  return {r * std::cos(theta), r * std::sin(theta)};
}

PolarPoint cartesian_to_polar(Point2D p) {
  return {std::hypot(p.x, p.y), wrap_angle(std::atan2(p.y, p.x))};
}

double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

void GridSpec::validate() const {
  if (range_count < 1) throw InvalidArgument("grid: range_count must be >= 1");
  if (azimuth_count < 1) {
    throw InvalidArgument("grid: azimuth_count must be >= 1");
  }
  if (!positive_finite(range_step)) {
    throw InvalidArgument("grid: range_step must be positive");
  }
  if (!positive_finite(azimuth_step)) {
    throw InvalidArgument("grid: azimuth_step must be positive");
  }
  // Small slack so that count * (2 pi / count) passes despite rounding.
  if (azimuth_count * azimuth_step > kTwoPi * (1.0 + 1e-12)) {
    throw InvalidArgument(
        "grid: azimuth_count * azimuth_step exceeds 2*pi, azimuths would wrap");
  }
}

Scene Scene::from_polar(double range, double azimuth, double noise_power,
                        double transmit_power, int samples) {
  Scene scene;
  scene.radar_position = {0.0, 0.0};
  scene.target_range = range;
  scene.target_azimuth = wrap_angle(azimuth);
  scene.target_position =
      polar_to_cartesian(range >= 0.0 ? range : 0.0, azimuth);
  scene.noise_power = noise_power;
  scene.transmit_power = transmit_power;
  scene.samples = samples;
  return scene;
}

void Scene::validate() const {
  if (!positive_finite(target_range)) {
    throw InvalidArgument("scene: target range must be positive");
  }
  if (!positive_finite(noise_power)) {
    throw InvalidArgument("scene: noise power must be positive");
  }
  if (!positive_finite(transmit_power)) {
    throw InvalidArgument("scene: transmit power must be positive");
  }
  if (samples < 1) throw InvalidArgument("scene: samples must be >= 1");
  const Point2D offset{target_position.x - radar_position.x,
                       target_position.y - radar_position.y};
  const PolarPoint polar = cartesian_to_polar(offset);
  if (std::abs(polar.range - target_range) > 1e-9 * target_range) {
    throw InvalidArgument("scene: target range inconsistent with positions");
  }
  const double angle_error =
      std::abs(std::remainder(polar.azimuth - target_azimuth, kTwoPi));
  if (angle_error > 1e-9) {
    throw InvalidArgument("scene: target azimuth inconsistent with positions");
  }
}

TargetBearing scene_angles(Point2D position, const Scene& scene) {
  const double dx = scene.target_position.x - position.x;
  const double dy = scene.target_position.y - position.y;
  const double d = std::hypot(dx, dy);
  if (d < kCoincidenceTolerance) {
    throw InvalidArgument("scene_angles: IRS coincides with the target");
  }
  return {wrap_angle(std::atan2(dy, dx)), d};
}

CandidateSet build_candidate_grid(const GridSpec& spec, const Scene& scene) {
  spec.validate();
  scene.validate();

  CandidateSet candidates;
  candidates.reserve(static_cast<std::size_t>(spec.size()));
  for (int i = 1; i <= spec.range_count; ++i) {
    const double r = i * spec.range_step;
    for (int k = 1; k <= spec.azimuth_count; ++k) {
      const double theta = wrap_angle(k * spec.azimuth_step);
      const Point2D local = polar_to_cartesian(r, theta);
      const Point2D position{scene.radar_position.x + local.x,
                             scene.radar_position.y + local.y};
      if (distance(position, scene.target_position) < kTargetExclusionRadius) {
        continue;
      }
      const TargetBearing bearing = scene_angles(position, scene);
      Candidate c;
      c.index = static_cast<int>(candidates.size());
      c.range = r;
      c.azimuth = theta;
      c.position = position;
      c.radar_irs_angle = theta;
      c.irs_target_angle = bearing.angle;
      c.radar_irs_distance = r;
      c.irs_target_distance = bearing.distance;
      candidates.push_back(c);
    }
  }
  return candidates;
}

}  // namespace irs
