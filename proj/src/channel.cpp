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

#include "irs/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irs/errors.hpp"

namespace irs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ArraySpec::validate() const {
  if (n_tx < 1 || n_rx < 1 || n_irs_elements < 1) {
    throw InvalidArgument("array: element counts must be >= 1");
  }
  if (!positive_finite(tx_spacing) || !positive_finite(irs_spacing)) {
    throw InvalidArgument("array: spacings must be positive");
  }
  if (irs_spacing > tx_spacing) {
    throw InvalidArgument("array: irs_spacing must not exceed tx_spacing");
  }
  if (!positive_finite(wavelength)) {
    throw InvalidArgument("array: wavelength must be positive");
  }
}

void PhaseProfile::validate() const {
  if (phases.empty()) throw InvalidArgument("phase profile is empty");
  for (double phi : phases) {
    if (!(phi >= 0.0 && phi < kTwoPi)) {
      throw InvalidArgument("phase profile entry outside [0, 2*pi)");
    }
  }
}

Eigen::VectorXcd steering_vector(int n, double spacing, double theta) {
  if (n < 1) throw InvalidArgument("steering_vector: n must be >= 1");
  const double step = kTwoPi * spacing * std::sin(theta);
  Eigen::VectorXcd v(n);
  v(0) = Complex(1.0, 0.0);
  for (int k = 1; k < n; ++k) v(k) = std::polar(1.0, step * k);
  return v;
}

PhaseProfile random_phase_profile(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("random_phase_profile: n must be >= 1");
  PhaseProfile profile;
  profile.phases.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // uniform() < 1 and the product rounds below 2*pi for every 53-bit draw.
    profile.phases.push_back(kTwoPi * rng.uniform());
  }
  return profile;
}

Complex cascade_gain(const PhaseProfile& profile, double theta_ri,
                     double theta_ti, const ArraySpec& spec) {
  if (profile.size() != spec.n_irs_elements) {
    throw InvalidArgument("cascade_gain: profile length != n_irs_elements");
  }
  const double step =
      kTwoPi * spec.irs_spacing * (std::sin(theta_ri) + std::sin(theta_ti));
  Complex sum(0.0, 0.0);
  for (int k = 0; k < profile.size(); ++k) {
    sum += std::polar(1.0, profile.phases[k] + step * k);
  }
  return sum;
}

ChannelMatrix nlos_channel(const Candidate& candidate,
                           const PhaseProfile& profile, const ArraySpec& spec,
                           Complex alpha) {
  const Complex c = cascade_gain(profile, candidate.radar_irs_angle,
                                 candidate.irs_target_angle, spec);
  const Eigen::VectorXcd a_r =
      steering_vector(spec.n_rx, spec.tx_spacing, candidate.radar_irs_angle);
  const Eigen::VectorXcd a_t =
      steering_vector(spec.n_tx, spec.tx_spacing, candidate.radar_irs_angle);
  return {(alpha * c * c) * a_r * a_t.transpose(), candidate.index};
}

Complex reflectivity(const ReflectivityModel& model, const Candidate& candidate) {
  switch (model.kind()) {
    case ReflectivityModel::Kind::kUnit:
      return {1.0, 0.0};
    case ReflectivityModel::Kind::kInverseSquareProduct: {
      const double dri = candidate.radar_irs_distance;
      const double dti = candidate.irs_target_distance;
      return {1.0 / (dri * dri * dti * dti), 0.0};
    }
    case ReflectivityModel::Kind::kFixedList: {
      const auto& values = model.values();
      if (candidate.index < 0 ||
          static_cast<std::size_t>(candidate.index) >= values.size()) {
        throw InvalidArgument("reflectivity: no fixed value for candidate " +
                              std::to_string(candidate.index));
      }
      return values[static_cast<std::size_t>(candidate.index)];
    }
  }
  throw InvalidArgument("reflectivity: unknown model");
}

Eigen::MatrixXcd simulate_snapshot(std::span<const ChannelMatrix> channels,
                                   const Eigen::MatrixXcd& transmit,
                                   double noise_power, int n_rx, Rng& rng) {
  if (n_rx < 1) throw InvalidArgument("simulate_snapshot: n_rx must be >= 1");
  if (!(noise_power >= 0.0)) {
    throw InvalidArgument("simulate_snapshot: negative noise power");
  }
  const Eigen::Index n_tx = transmit.rows();
  Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(n_rx, n_tx);
  for (const ChannelMatrix& h : channels) {
    if (h.entries.rows() != n_rx || h.entries.cols() != n_tx) {
      throw InvalidArgument("simulate_snapshot: channel dimension mismatch");
    }
    combined += h.entries;
  }
  Eigen::MatrixXcd received = combined * transmit;
  if (noise_power > 0.0) {
    for (Eigen::Index col = 0; col < received.cols(); ++col) {
      for (Eigen::Index row = 0; row < received.rows(); ++row) {
        received(row, col) += rng.complex_normal(noise_power);
      }
    }
  }
  return received;
}

}  // namespace irs
