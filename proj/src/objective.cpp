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

#include "irs/objective.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "irs/errors.hpp"

namespace irs {
namespace {

std::vector<bool> membership(std::span<const int> selection,
                             const ObjectiveContext& ctx) {
  std::vector<bool> member(static_cast<std::size_t>(ctx.size()), false);
  for (int u : selection) {
    ctx.check_index(u);
    if (member[u]) {
      throw InvalidArgument("duplicate candidate index " + std::to_string(u));
    }
    member[u] = true;
  }
  return member;
}

void add_increment(Eigen::MatrixXcd& gram, const GramIncrement& g) {
  if (g.weight == 0.0) return;
  gram.noalias() += g.weight * (g.direction * g.direction.adjoint());
}

Eigen::MatrixXcd gram_of(std::span<const int> selection,
                         const ObjectiveContext& ctx) {
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(ctx.n_tx(), ctx.n_tx());
  for (int u : selection) add_increment(gram, ctx.increment(u));
  return gram;
}

double log_det(const Eigen::LLT<Eigen::MatrixXcd>& llt) {
  if (llt.info() != Eigen::Success) {
    throw NumericalError("Cholesky factorization of I + Gram sum failed");
  }
  const auto& factor = llt.matrixLLT();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < factor.rows(); ++i) {
    sum += std::log(factor(i, i).real());
  }
  return 2.0 * sum;
}

}  // namespace

ObjectiveContext::ObjectiveContext(CandidateSet candidates,
                                   std::vector<ChannelMatrix> channels,
                                   std::vector<GramIncrement> increments,
                                   Scene scene, int n_tx, int n_rx)
    : candidates_(std::move(candidates)),
      channels_(std::move(channels)),
      increments_(std::move(increments)),
      scene_(std::move(scene)),
      n_tx_(n_tx),
      n_rx_(n_rx) {
  if (n_tx_ < 1 || n_rx_ < 1) {
    throw InvalidArgument("objective context: array sizes must be >= 1");
  }
  if (channels_.size() != candidates_.size() ||
      increments_.size() != candidates_.size()) {
    throw InvalidArgument("objective context: per-candidate vectors differ");
  }
  for (std::size_t u = 0; u < candidates_.size(); ++u) {
    if (candidates_[u].index != static_cast<int>(u)) {
      throw InvalidArgument("objective context: candidate indices must be 0..n-1");
    }
    if (channels_[u].entries.rows() != n_rx_ ||
        channels_[u].entries.cols() != n_tx_) {
      throw InvalidArgument("objective context: channel is not n_rx x n_tx");
    }
    if (increments_[u].direction.size() != n_tx_ ||
        !(increments_[u].weight >= 0.0)) {
      throw InvalidArgument("objective context: malformed Gram increment");
    }
  }
}

double ObjectiveContext::amplitude_scale() const {
  return std::sqrt(scene_.transmit_power / scene_.noise_power);
}

void ObjectiveContext::check_index(int u) const {
  if (u < 0 || u >= size()) {
    throw InvalidArgument("unknown candidate index " + std::to_string(u));
  }
}

ObjectiveContext build_objective_context(const CandidateSet& candidates,
                                         const ArraySpec& array,
                                         const Scene& scene,
                                         const ReflectivityModel& model,
                                         std::span<const PhaseProfile> phases) {
  array.validate();
  scene.validate();
  if (phases.size() != candidates.size()) {
    throw InvalidArgument("need exactly one phase profile per candidate");
  }
  const double snr = scene.transmit_power / scene.noise_power;

  std::vector<ChannelMatrix> channels;
  std::vector<GramIncrement> increments;
  channels.reserve(candidates.size());
  increments.reserve(candidates.size());
  for (std::size_t u = 0; u < candidates.size(); ++u) {
    const Candidate& cand = candidates[u];
    const PhaseProfile& profile = phases[u];
    profile.validate();
    const Complex alpha = reflectivity(model, cand);
    const Complex c = cascade_gain(profile, cand.radar_irs_angle,
                                   cand.irs_target_angle, array);
    channels.push_back(nlos_channel(cand, profile, array, alpha));

    const double path = std::norm(alpha * c * c);  // |alpha c^2|^2
    GramIncrement g;
    g.weight = snr * array.n_rx * path;
    g.direction =
        steering_vector(array.n_tx, array.tx_spacing, cand.radar_irs_angle)
            .conjugate();
    increments.push_back(std::move(g));
  }
  return ObjectiveContext(candidates, std::move(channels), std::move(increments),
                          scene, array.n_tx, array.n_rx);
}

Eigen::MatrixXcd stacked_channel(std::span<const int> selection,
                                 const ObjectiveContext& ctx) {
  const Eigen::Index n_rx = ctx.n_rx();
  Eigen::MatrixXcd stacked(n_rx * static_cast<Eigen::Index>(selection.size()),
                           ctx.n_tx());
  const double scale = ctx.amplitude_scale();
  Eigen::Index row = 0;
  for (int u : selection) {
    ctx.check_index(u);
    stacked.middleRows(row, n_rx) = scale * ctx.channel(u).entries;
    row += n_rx;
  }
  return stacked;
}

double objective_value(std::span<const int> selection,
                       const ObjectiveContext& ctx) {
  membership(selection, ctx);
  Eigen::LLT<Eigen::MatrixXcd> llt(gram_of(selection, ctx));
  return log_det(llt);
}

double objective_value_stacked(std::span<const int> selection,
                               const ObjectiveContext& ctx) {
  membership(selection, ctx);
  if (selection.empty()) return 0.0;
  const Eigen::MatrixXcd h = stacked_channel(selection, ctx);
  Eigen::MatrixXcd k = h * h.adjoint();
  k.diagonal().array() += 1.0;
  Eigen::LLT<Eigen::MatrixXcd> llt(k);
  return log_det(llt);
}

double conditional_entropy(std::span<const int> selection,
                           const ObjectiveContext& ctx) {
  const Scene& scene = ctx.scene();
  const double n = scene.samples;
  const double n_rx = ctx.n_rx();
  const double log_det_term =
      objective_value(selection, ctx) + n_rx * std::log(scene.noise_power);
  return n * log_det_term / 2.0 +
         n * n_rx / 2.0 * (1.0 + std::log(2.0 * std::numbers::pi));
}

double noise_entropy(const ObjectiveContext& ctx) {
  const Scene& scene = ctx.scene();
  const double n = scene.samples;
  const double n_rx = ctx.n_rx();
  return n * n_rx *
         (1.0 + std::log(2.0 * std::numbers::pi) + std::log(scene.noise_power)) /
         2.0;
}

double mutual_information(std::span<const int> selection,
                          const ObjectiveContext& ctx) {
  return conditional_entropy(selection, ctx) - noise_entropy(ctx);
}

GramState::GramState(std::vector<int> selected, std::vector<bool> member,
                     Eigen::MatrixXcd gram, double value)
    : selected_(std::move(selected)),
      member_(std::move(member)),
      gram_(std::move(gram)),
      llt_(gram_),
      value_(value) {
  if (llt_.info() != Eigen::Success) {
    throw NumericalError("Cholesky factorization of I + Gram sum failed");
  }
}

GramState GramState::empty(const ObjectiveContext& ctx) {
  return GramState({}, std::vector<bool>(static_cast<std::size_t>(ctx.size())),
                   Eigen::MatrixXcd::Identity(ctx.n_tx(), ctx.n_tx()), 0.0);
}

GramState GramState::from_selection(const ObjectiveContext& ctx,
                                    std::span<const int> selection) {
  std::vector<bool> member = membership(selection, ctx);
  Eigen::MatrixXcd gram = gram_of(selection, ctx);
  GramState state({selection.begin(), selection.end()}, std::move(member),
                  std::move(gram), 0.0);
  state.value_ = log_det(state.llt_);
  return state;
}

double marginal_gain(const GramState& state, int u, const ObjectiveContext& ctx) {
  ctx.check_index(u);
  if (state.contains(u)) {
    throw InvalidArgument("candidate " + std::to_string(u) +
                          " is already selected");
  }
  const GramIncrement& g = ctx.increment(u);
  if (g.weight == 0.0) return 0.0;
  // v^H A^{-1} v = |L^{-1} v|^2 for A = L L^H.
  const Eigen::VectorXcd y = state.llt_.matrixL().solve(g.direction);
  return std::log1p(g.weight * y.squaredNorm());
}

GramState update_state(const GramState& state, int u,
                       const ObjectiveContext& ctx) {
  const double gain = marginal_gain(state, u, ctx);
  std::vector<int> selected = state.selected_;
  selected.push_back(u);
  std::vector<bool> member = state.member_;
  member[u] = true;
  Eigen::MatrixXcd gram = state.gram_;
  add_increment(gram, ctx.increment(u));
  return GramState(std::move(selected), std::move(member), std::move(gram),
                   state.value_ + gain);
}

}  // namespace irs
