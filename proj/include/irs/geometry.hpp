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

#ifndef IRS_GEOMETRY_HPP_
#define IRS_GEOMETRY_HPP_

#include <vector>

namespace irs {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

struct PolarPoint {
  double range = 0.0;
  double azimuth = 0.0;  // [0, 2*pi)
};

// Maps any angle onto [0, 2*pi).
double wrap_angle(double theta);

// (r cos(theta), r sin(theta)); r must be non-negative.
Point2D polar_to_cartesian(double r, double theta);
PolarPoint cartesian_to_polar(Point2D p);

double distance(Point2D a, Point2D b);

// Discretized range-azimuth plane: ranges {step, 2 step, ..., count * step}
// and azimuths {step, 2 step, ..., count * step} (mod 2*pi).
struct GridSpec {
  int range_count = 100;
  double range_step = 1.0;
  int azimuth_count = 12;
  double azimuth_step = 0.5235987755982988;  // pi / 6

  // Throws InvalidArgument when counts are not positive, steps are not
  // positive and finite, or azimuth_count * azimuth_step exceeds 2*pi.
  void validate() const;
  int size() const { return range_count * azimuth_count; }
};

// Radar and target geometry plus the link-budget constants used by the
// objective.
struct Scene {
  Point2D radar_position;
  Point2D target_position;
  double target_range = 0.0;    // d_tr
  double target_azimuth = 0.0;  // theta_tr, global frame
  double noise_power = 1.0;     // sigma^2
  double transmit_power = 1.0;  // P_T
  int samples = 64;             // N

  // Radar at the origin and target at (range, azimuth).
  static Scene from_polar(double range, double azimuth, double noise_power,
                          double transmit_power, int samples);

  void validate() const;
};

// One cell of the candidate set. Angles are global-frame radians, distances
// meters.
struct Candidate {
  int index = 0;
  double range = 0.0;
  double azimuth = 0.0;
  Point2D position;
  double radar_irs_angle = 0.0;      // equals azimuth
  double irs_target_angle = 0.0;     // direction IRS -> target
  double radar_irs_distance = 0.0;   // equals range
  double irs_target_distance = 0.0;
};

using CandidateSet = std::vector<Candidate>;

struct TargetBearing {
  double angle = 0.0;     // [0, 2*pi)
  double distance = 0.0;
};

// Direction and distance from an IRS at `position` to the scene's target.
// Throws InvalidArgument when the two points are closer than 1e-9 m.
TargetBearing scene_angles(Point2D position, const Scene& scene);

// Builds the candidate grid in range-major order. Cells within 1e-6 m of the
// target are dropped; surviving candidates are indexed 0..n-1 contiguously.
CandidateSet build_candidate_grid(const GridSpec& spec, const Scene& scene);

}  // namespace irs

#endif  // IRS_GEOMETRY_HPP_
