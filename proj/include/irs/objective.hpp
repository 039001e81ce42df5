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

#ifndef IRS_OBJECTIVE_HPP_
#define IRS_OBJECTIVE_HPP_

#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "irs/channel.hpp"
#include "irs/geometry.hpp"

namespace irs {

// Rank-1 Gram contribution weight * direction * direction^H of one
// candidate, where direction = conj(a_t(theta_ri)) and
// weight = (P_T / sigma^2) N_r |alpha c^2|^2.
struct GramIncrement {
  double weight = 0.0;
  Eigen::VectorXcd direction;
};

// Everything the set function needs about the ground set: per-candidate
// channels (for the stacked form) and Gram increments (for the N_t x N_t
// form). Immutable once built.
class ObjectiveContext {
 public:
  // Validates that all three vectors have equal length, channels are
  // n_rx x n_tx and directions have length n_tx.
  ObjectiveContext(CandidateSet candidates, std::vector<ChannelMatrix> channels,
                   std::vector<GramIncrement> increments, Scene scene, int n_tx,
                   int n_rx);

  int size() const { return static_cast<int>(candidates_.size()); }
  int n_tx() const { return n_tx_; }
  int n_rx() const { return n_rx_; }
  const Scene& scene() const { return scene_; }
  const CandidateSet& candidates() const { return candidates_; }
  const Candidate& candidate(int u) const { return candidates_[u]; }
  const ChannelMatrix& channel(int u) const { return channels_[u]; }
  const GramIncrement& increment(int u) const { return increments_[u]; }

  // sqrt(P_T) / sigma.
  double amplitude_scale() const;

  // Throws InvalidArgument for an out-of-range index.
  void check_index(int u) const;

 private:
  CandidateSet candidates_;
  std::vector<ChannelMatrix> channels_;
  std::vector<GramIncrement> increments_;
  Scene scene_;
  int n_tx_;
  int n_rx_;
};

// Builds channels and Gram increments for every candidate. `phases` holds
// one profile per candidate, in index order.
ObjectiveContext build_objective_context(const CandidateSet& candidates,
                                         const ArraySpec& array,
                                         const Scene& scene,
                                         const ReflectivityModel& model,
                                         std::span<const PhaseProfile> phases);

// Vertical stack of (sqrt(P_T)/sigma) H_u over S in iteration order;
// (|S| N_r) x N_t.
Eigen::MatrixXcd stacked_channel(std::span<const int> selection,
                                 const ObjectiveContext& ctx);

// f(S) = ln det(I + sum_{u in S} G_u), N_t x N_t Cholesky route. S must hold
// distinct valid indices.
double objective_value(std::span<const int> selection,
                       const ObjectiveContext& ctx);

// f(S) = ln det(H_S H_S^H + I) evaluated on the (|S| N_r)-dimensional side.
// Slow; kept as the second algebraic route.
double objective_value_stacked(std::span<const int> selection,
                               const ObjectiveContext& ctx);

// Entropy of the received block given the transmit block under the Gaussian
// model: (N/2)(f(S) + N_r ln sigma^2) + (N N_r / 2)(1 + ln 2 pi).
double conditional_entropy(std::span<const int> selection,
                           const ObjectiveContext& ctx);

// Entropy of the noise block alone: N N_r (1 + ln 2 pi + ln sigma^2) / 2.
double noise_entropy(const ObjectiveContext& ctx);

// conditional_entropy(S) - noise_entropy; equals (N/2) f(S).
double mutual_information(std::span<const int> selection,
                          const ObjectiveContext& ctx);

// Cached A_S = I + sum_{u in S} G_u, its Cholesky factor and f(S).
class GramState {
 public:
  // The empty selection: A = I, f = 0.
  static GramState empty(const ObjectiveContext& ctx);
  // Built from scratch for a set of distinct indices.
  static GramState from_selection(const ObjectiveContext& ctx,
                                  std::span<const int> selection);

  const std::vector<int>& selected() const { return selected_; }
  int size() const { return static_cast<int>(selected_.size()); }
  bool contains(int u) const { return member_[u]; }
  double value() const { return value_; }
  const Eigen::MatrixXcd& matrix() const { return gram_; }

  friend double marginal_gain(const GramState& state, int u,
                              const ObjectiveContext& ctx);
  friend GramState update_state(const GramState& state, int u,
                                const ObjectiveContext& ctx);

 private:
  GramState(std::vector<int> selected, std::vector<bool> member,
            Eigen::MatrixXcd gram, double value);

  std::vector<int> selected_;
  std::vector<bool> member_;
  Eigen::MatrixXcd gram_;
  Eigen::LLT<Eigen::MatrixXcd> llt_;
  double value_ = 0.0;
};

// f(S + u) - f(S) = ln(1 + w_u v_u^H A_S^{-1} v_u) via one triangular solve.
// Throws InvalidArgument if u is already selected.
double marginal_gain(const GramState& state, int u, const ObjectiveContext& ctx);

// Returns the state for S + u; the input is left untouched.
GramState update_state(const GramState& state, int u,
                       const ObjectiveContext& ctx);

}  // namespace irs

#endif  // IRS_OBJECTIVE_HPP_
