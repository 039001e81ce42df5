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
#include <vector>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "irs/errors.hpp"
#include "oracles.hpp"

namespace irs {
namespace {

constexpr double kPi = std::numbers::pi;

Candidate candidate_at(double theta_ri, double theta_ti, double dri = 1.0,
                       double dti = 1.0, int index = 0) {
  Candidate c;
  c.index = index;
  c.range = dri;
  c.azimuth = theta_ri;
  c.radar_irs_angle = theta_ri;
  c.irs_target_angle = theta_ti;
  c.radar_irs_distance = dri;
  c.irs_target_distance = dti;
  return c;
}

ArraySpec array(int nt, int nr, int nm) {
  ArraySpec spec;
  spec.n_tx = nt;
  spec.n_rx = nr;
  spec.n_irs_elements = nm;
  return spec;
}

PhaseProfile zeros(int n) { return {std::vector<double>(n, 0.0)}; }

TEST(SteeringVectorTest, BroadsideIsAllOnes) {
  const Eigen::VectorXcd v = steering_vector(4, 0.5, 0.0);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(v(k), Complex(1.0, 0.0));
}

TEST(SteeringVectorTest, SingleElement) {
  const Eigen::VectorXcd v = steering_vector(1, 0.37, 2.1);
  ASSERT_EQ(v.size(), 1);
  EXPECT_EQ(v(0), Complex(1.0, 0.0));
}

TEST(SteeringVectorTest, EndfireHalfWavelengthAlternates) {
  const Eigen::VectorXcd v = steering_vector(2, 0.5, kPi / 2);
  EXPECT_EQ(v(0), Complex(1.0, 0.0));
  EXPECT_NEAR(v(1).real(), -1.0, 1e-15);
  EXPECT_NEAR(v(1).imag(), 0.0, 1e-15);
}

TEST(SteeringVectorTest, FirstEntryIsExactlyOneAndEntriesUnitModulus) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(16));
    const Eigen::VectorXcd v =
        steering_vector(n, rng.uniform(), 2 * kPi * rng.uniform());
    EXPECT_EQ(v(0), Complex(1.0, 0.0));
    for (int k = 0; k < n; ++k) EXPECT_NEAR(std::abs(v(k)), 1.0, 1e-15);
  }
  EXPECT_THROW(steering_vector(0, 0.5, 0.0), InvalidArgument);
}

TEST(PhaseProfileTest, SeededDrawsAreReproducible) {
  Rng a(123);
  Rng b(123);
  EXPECT_EQ(random_phase_profile(16, a).phases, random_phase_profile(16, b).phases);
}

TEST(PhaseProfileTest, DrawsLieInRange) {
  Rng rng(8);
  const PhaseProfile p = random_phase_profile(16, rng);
  ASSERT_EQ(p.size(), 16);
  for (double phi : p.phases) {
    EXPECT_GE(phi, 0.0);
    EXPECT_LT(phi, 2 * kPi);
  }
  EXPECT_NO_THROW(p.validate());
}

TEST(PhaseProfileTest, GoldenValues) {
  Rng rng(7);
  const PhaseProfile p = random_phase_profile(4, rng);
  const std::vector<double> golden = {4.7399426590054405, 5.9646353701029691,
                                      0.73773568544913826, 5.6040557671997009};
  EXPECT_EQ(p.phases, golden);
}

TEST(PhaseProfileTest, ValidationRejectsOutOfRange) {
  EXPECT_THROW((PhaseProfile{{}}).validate(), InvalidArgument);
  EXPECT_THROW((PhaseProfile{{2 * kPi}}).validate(), InvalidArgument);
  EXPECT_THROW((PhaseProfile{{-0.1}}).validate(), InvalidArgument);
}

TEST(CascadeGainTest, SinglePassiveElement) {
  EXPECT_EQ(cascade_gain(zeros(1), 0.3, 1.2, array(1, 1, 1)), Complex(1.0, 0.0));
}

TEST(CascadeGainTest, CoherentSumAtBroadside) {
  const Complex c = cascade_gain(zeros(16), 0.0, 0.0, array(1, 1, 16));
  EXPECT_NEAR(c.real(), 16.0, 1e-12);
  EXPECT_NEAR(c.imag(), 0.0, 1e-12);
}

TEST(CascadeGainTest, OppositePhasesCancel) {
  const Complex c = cascade_gain({{0.0, kPi}}, 0.0, 0.0, array(1, 1, 2));
  EXPECT_NEAR(std::abs(c), 0.0, 1e-15);
}

TEST(CascadeGainTest, ReciprocalAndBounded) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const int nm = 1 + static_cast<int>(rng.below(32));
    ArraySpec spec = array(2, 2, nm);
    spec.irs_spacing = 0.5 * rng.uniform() + 1e-3;
    const PhaseProfile p = random_phase_profile(nm, rng);
    const double a = 2 * kPi * rng.uniform();
    const double b = 2 * kPi * rng.uniform();
    EXPECT_EQ(cascade_gain(p, a, b, spec), cascade_gain(p, b, a, spec));
    EXPECT_LE(std::abs(cascade_gain(p, a, b, spec)), nm * (1 + 1e-12));
  }
}

TEST(CascadeGainTest, RejectsWrongProfileLength) {
  EXPECT_THROW(cascade_gain(zeros(3), 0.0, 0.0, array(1, 1, 4)), InvalidArgument);
}

TEST(NlosChannelTest, AllScalarCascade) {
  const ChannelMatrix h =
      nlos_channel(candidate_at(0.4, 1.1), zeros(1), array(1, 1, 1), 1.0);
  ASSERT_EQ(h.entries.rows(), 1);
  ASSERT_EQ(h.entries.cols(), 1);
  EXPECT_EQ(h.entries(0, 0), Complex(1.0, 0.0));
}

TEST(NlosChannelTest, BroadsideTwoByTwoIsAllOnes) {
  const ChannelMatrix h =
      nlos_channel(candidate_at(0.0, 2.7), zeros(1), array(2, 2, 1), 1.0);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) EXPECT_EQ(h.entries(r, c), Complex(1.0, 0.0));
  }
}

TEST(NlosChannelTest, MatchesFiveFactorProductAndIsRankOne) {
  Rng rng(2718);
  for (int i = 0; i < 200; ++i) {
    ArraySpec spec = array(1 + static_cast<int>(rng.below(8)),
                           1 + static_cast<int>(rng.below(8)),
                           1 + static_cast<int>(rng.below(24)));
    spec.irs_spacing = 0.05 + 0.45 * rng.uniform();
    const Candidate c = candidate_at(2 * kPi * rng.uniform(), 2 * kPi * rng.uniform());
    const PhaseProfile p = random_phase_profile(spec.n_irs_elements, rng);
    const Complex alpha = std::polar(0.1 + rng.uniform(), 2 * kPi * rng.uniform());

    const Eigen::MatrixXcd closed = nlos_channel(c, p, spec, alpha).entries;
    const Eigen::MatrixXcd literal = oracle::five_factor_channel(c, p, spec, alpha);
    EXPECT_LE((closed - literal).norm(), 1e-12 * literal.norm());

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(closed);
    const auto& s = svd.singularValues();
    if (s.size() > 1) EXPECT_LE(s(1), 1e-9 * s(0));
  }
}

TEST(ReflectivityTest, UnitModel) {
  EXPECT_EQ(reflectivity(ReflectivityModel::unit(), candidate_at(0.1, 0.2, 7, 9)),
            Complex(1.0, 0.0));
}

TEST(ReflectivityTest, InverseSquareProduct) {
  const auto model = ReflectivityModel::inverse_square_product();
  EXPECT_EQ(reflectivity(model, candidate_at(0, 0, 1.0, 1.0)), Complex(1.0, 0.0));
  const Complex a = reflectivity(model, candidate_at(0, 0, 2.0, 3.0));
  EXPECT_DOUBLE_EQ(a.real(), 1.0 / 36.0);
  EXPECT_EQ(a.imag(), 0.0);
}

TEST(ReflectivityTest, FixedListLooksUpByIndex) {
  const auto model = ReflectivityModel::fixed_list({{1.0, 2.0}, {0.0, -1.0}});
  EXPECT_EQ(reflectivity(model, candidate_at(0, 0, 1, 1, 1)), Complex(0.0, -1.0));
  EXPECT_THROW(reflectivity(model, candidate_at(0, 0, 1, 1, 2)), InvalidArgument);
}

TEST(SnapshotTest, NoiselessIdentityExcitationReturnsChannel) {
  Rng rng(1);
  const ArraySpec spec = array(3, 2, 4);
  Rng phase_rng(4);
  const ChannelMatrix h = nlos_channel(candidate_at(0.7, 1.9),
                                       random_phase_profile(4, phase_rng), spec,
                                       Complex(0.5, 0.5));
  const std::vector<ChannelMatrix> channels = {h};
  const Eigen::MatrixXcd y = simulate_snapshot(
      channels, Eigen::MatrixXcd::Identity(3, 3), 0.0, 2, rng);
  EXPECT_EQ(y, h.entries);
}

TEST(SnapshotTest, EmptySumWithoutNoiseIsZero) {
  Rng rng(1);
  const Eigen::MatrixXcd y = simulate_snapshot(
      {}, Eigen::MatrixXcd::Ones(3, 10), 0.0, 4, rng);
  EXPECT_EQ(y, Eigen::MatrixXcd::Zero(4, 10));
}

TEST(SnapshotTest, NoiseOnlySampleVarianceMatches) {
  Rng rng(31);
  const Eigen::MatrixXcd y = simulate_snapshot(
      {}, Eigen::MatrixXcd::Zero(2, 5000), 1.0, 4, rng);
  const double variance = y.squaredNorm() / static_cast<double>(y.size());
  EXPECT_NEAR(variance, 1.0, 0.05);
}

TEST(SnapshotTest, SeededNoiseIsReproducible) {
  Rng a(9);
  Rng b(9);
  const Eigen::MatrixXcd x = Eigen::MatrixXcd::Ones(2, 8);
  EXPECT_EQ(simulate_snapshot({}, x, 0.3, 3, a), simulate_snapshot({}, x, 0.3, 3, b));
}

TEST(SnapshotTest, RejectsDimensionMismatch) {
  Rng rng(1);
  const std::vector<ChannelMatrix> channels = {
      {Eigen::MatrixXcd::Ones(2, 3), 0}};
  EXPECT_THROW(simulate_snapshot(channels, Eigen::MatrixXcd::Ones(4, 5), 0.0, 2, rng),
               InvalidArgument);
  EXPECT_THROW(simulate_snapshot(channels, Eigen::MatrixXcd::Ones(3, 5), 0.0, 3, rng),
               InvalidArgument);
}

TEST(ArraySpecTest, Validation) {
  EXPECT_NO_THROW(ArraySpec{}.validate());
  ArraySpec bad;
  bad.n_irs_elements = 0;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = ArraySpec{};
  bad.irs_spacing = 0.6;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = ArraySpec{};
  bad.tx_spacing = -0.5;
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

}  // namespace
}  // namespace irs
