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

#ifndef IRS_CHANNEL_HPP_
#define IRS_CHANNEL_HPP_

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "irs/geometry.hpp"
#include "irs/rng.hpp"

namespace irs {

using Complex = std::complex<double>;

// Radar transceiver and IRS array dimensions. Spacings are in wavelengths.
struct ArraySpec {
  int n_tx = 8;
  int n_rx = 8;
  int n_irs_elements = 16;
  double tx_spacing = 0.5;
  double irs_spacing = 0.125;
  double wavelength = 0.1;  // meters; phases depend only on the spacings

  // Throws InvalidArgument unless counts >= 1, spacings > 0 and
  // irs_spacing <= tx_spacing.
  void validate() const;
};

// Per-element IRS phase shifts, each in [0, 2*pi).
struct PhaseProfile {
  std::vector<double> phases;

  void validate() const;
  int size() const { return static_cast<int>(phases.size()); }
};

// Complex N_r x N_t channel of one IRS path, reflectivity already applied.
struct ChannelMatrix {
  Eigen::MatrixXcd entries;
  int candidate_index = -1;
};

// Target reflectivity alpha along the path through one IRS.
class ReflectivityModel {
 public:
  enum class Kind { kUnit, kInverseSquareProduct, kFixedList };

  static ReflectivityModel unit() { return ReflectivityModel(Kind::kUnit, {}); }
  // alpha = 1 / (d_ri^2 d_ti^2), zero phase.
  static ReflectivityModel inverse_square_product() {
    return ReflectivityModel(Kind::kInverseSquareProduct, {});
  }
  // alpha looked up by candidate index.
  static ReflectivityModel fixed_list(std::vector<Complex> values) {
    return ReflectivityModel(Kind::kFixedList, std::move(values));
  }

  Kind kind() const { return kind_; }
  const std::vector<Complex>& values() const { return values_; }

 private:
  ReflectivityModel(Kind kind, std::vector<Complex> values)
      : kind_(kind), values_(std::move(values)) {}

  Kind kind_;
  std::vector<Complex> values_;
};

// ULA response: entry k is exp(j 2 pi spacing k sin(theta)).
Eigen::VectorXcd steering_vector(int n, double spacing, double theta);

// n independent phases uniform on [0, 2*pi).
PhaseProfile random_phase_profile(int n, Rng& rng);

// The scalar b^T(theta_ri) Phi b(theta_ti) of one IRS hop. Symmetric in the
// two angles.
Complex cascade_gain(const PhaseProfile& profile, double theta_ri,
                     double theta_ti, const ArraySpec& spec);

// Radar -> IRS -> target -> IRS -> radar channel in rank-1 form
// alpha c^2 a_r(theta_ri) a_t^T(theta_ri).
ChannelMatrix nlos_channel(const Candidate& candidate,
                           const PhaseProfile& profile, const ArraySpec& spec,
                           Complex alpha);

// Throws InvalidArgument for a fixed-list model without an entry for the
// candidate.
Complex reflectivity(const ReflectivityModel& model, const Candidate& candidate);

// Y = (sum_m H_m) X + W with W_ij ~ CN(0, noise_power). X is N_t x N.
Eigen::MatrixXcd simulate_snapshot(std::span<const ChannelMatrix> channels,
                                   const Eigen::MatrixXcd& transmit,
                                   double noise_power, int n_rx, Rng& rng);

}  // namespace irs

#endif  // IRS_CHANNEL_HPP_
