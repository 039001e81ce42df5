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

#include "irs/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "irs/errors.hpp"

namespace irs {
namespace {

void check_budget(const ObjectiveContext& ctx, int budget) {
  if (budget < 1 || budget > ctx.size()) {
    throw InvalidArgument("budget " + std::to_string(budget) +
                          " outside [1, " + std::to_string(ctx.size()) + "]");
  }
}

// Replays `order` through the incremental state to fill gains and values.
SelectionResult trace(const ObjectiveContext& ctx, const std::vector<int>& order,
                      Method method) {
  SelectionResult result;
  result.method = method;
  GramState state = GramState::empty(ctx);
  for (int u : order) {
    const double gain = marginal_gain(state, u, ctx);
    state = update_state(state, u, ctx);
    result.chosen.push_back(u);
    result.gains.push_back(gain);
    result.values.push_back(state.value());
  }
  result.final_value = state.value();
  return result;
}

double log_det_or_throw(const Eigen::MatrixXcd& a) {
  Eigen::LLT<Eigen::MatrixXcd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("Cholesky factorization of I + Gram sum failed");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    sum += std::log(llt.matrixLLT()(i, i).real());
  }
  return 2.0 * sum;
}

Eigen::MatrixXcd outer(const GramIncrement& g) {
  return g.weight * (g.direction * g.direction.adjoint());
}

// Depth-first lexicographic walk over all k-subsets keeping I + partial
// Gram sums per depth, so each leaf costs one rank-1 add and one Cholesky.
class SubsetEnumerator {
 public:
  SubsetEnumerator(const ObjectiveContext& ctx, int k)
      : ctx_(ctx), k_(k), combo_(static_cast<std::size_t>(k)),
        prefix_(static_cast<std::size_t>(k)) {
    prefix_[0] = Eigen::MatrixXcd::Identity(ctx.n_tx(), ctx.n_tx());
  }

  void run() { visit(0, 0); }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void visit(int depth, int start) {
    const int n = ctx_.size();
    const auto d = static_cast<std::size_t>(depth);
    if (depth == k_ - 1) {
      for (int u = start; u < n; ++u) {
        combo_[d] = u;
        const double value = log_det_or_throw(prefix_[d] + outer(ctx_.increment(u)));
        ++leaves_;
        if (value > best_value_) {
          best_value_ = value;
          best_ = combo_;
        }
      }
      return;
    }
    for (int u = start; u <= n - (k_ - depth); ++u) {
      combo_[d] = u;
      prefix_[d + 1] = prefix_[d] + outer(ctx_.increment(u));
      visit(depth + 1, u + 1);
    }
  }

  const ObjectiveContext& ctx_;
  int k_;
  std::vector<int> combo_;
  std::vector<Eigen::MatrixXcd> prefix_;
  std::vector<int> best_;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::uint64_t leaves_ = 0;
};

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kGreedy:
      return "greedy";
    case Method::kLazyGreedy:
      return "lazy";
    case Method::kRandom:
      return "random";
    case Method::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "greedy") return Method::kGreedy;
  if (name == "lazy" || name == "lazy-greedy") return Method::kLazyGreedy;
  if (name == "random") return Method::kRandom;
  if (name == "exhaustive") return Method::kExhaustive;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result * (n - i) / (i + 1) is exact: it equals C(n, i + 1).
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

SelectionResult greedy_place(const ObjectiveContext& ctx, int budget) {
  check_budget(ctx, budget);
  SelectionResult result;
  result.method = Method::kGreedy;
  GramState state = GramState::empty(ctx);
  for (int round = 0; round < budget; ++round) {
    int best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int u = 0; u < ctx.size(); ++u) {
      if (state.contains(u)) continue;
      const double gain = marginal_gain(state, u, ctx);
      ++result.evaluations;
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    state = update_state(state, best, ctx);
    result.chosen.push_back(best);
    result.gains.push_back(best_gain);
    result.values.push_back(state.value());
  }
  result.final_value = state.value();
  return result;
}

SelectionResult lazy_greedy_place(const ObjectiveContext& ctx, int budget) {
  check_budget(ctx, budget);

  struct Entry {
    double bound;
    int index;
    int round;  // round in which `bound` was computed exactly
  };
  // Max-heap on bound; among equal bounds the lowest index surfaces first.
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.index > b.index;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority);

  SelectionResult result;
  result.method = Method::kLazyGreedy;
  GramState state = GramState::empty(ctx);
  for (int u = 0; u < ctx.size(); ++u) {
    heap.push({marginal_gain(state, u, ctx), u, 0});
    ++result.evaluations;
  }

  for (int round = 0; round < budget; ++round) {
    for (;;) {
      const Entry top = heap.top();
      heap.pop();
      if (top.round == round) {
        state = update_state(state, top.index, ctx);
        result.chosen.push_back(top.index);
        result.gains.push_back(top.bound);
        result.values.push_back(state.value());
        break;
      }
      heap.push({marginal_gain(state, top.index, ctx), top.index, round});
      ++result.evaluations;
    }
  }
  result.final_value = state.value();
  return result;
}

SelectionResult random_place(const ObjectiveContext& ctx, int budget, Rng& rng) {
  check_budget(ctx, budget);
  std::vector<int> pool(static_cast<std::size_t>(ctx.size()));
  std::iota(pool.begin(), pool.end(), 0);
  const auto n = static_cast<std::uint64_t>(pool.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(budget); ++i) {
    const std::uint64_t j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(budget));
  return trace(ctx, pool, Method::kRandom);
}

SelectionResult exhaustive_place(const ObjectiveContext& ctx, int budget,
                                 std::uint64_t cap) {
  check_budget(ctx, budget);
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(ctx.size()),
                                       static_cast<std::uint64_t>(budget));
  if (count > cap) {
    throw InfeasibleError("exhaustive search over C(" +
                          std::to_string(ctx.size()) + ", " +
                          std::to_string(budget) + ") subsets exceeds the cap of " +
                          std::to_string(cap));
  }
  SubsetEnumerator enumerator(ctx, budget);
  enumerator.run();
  SelectionResult result = trace(ctx, enumerator.best(), Method::kExhaustive);
  result.evaluations = enumerator.leaves();
  return result;
}

CurvatureReport curvature(const ObjectiveContext& ctx) {
  const int n = ctx.size();
  if (n < 1) throw InvalidArgument("curvature: empty ground set");
  const Eigen::Index dim = ctx.n_tx();

  // prefix[j] = sum_{i<j} G_i, suffix[j] = sum_{i>=j} G_i.
  std::vector<Eigen::MatrixXcd> prefix(static_cast<std::size_t>(n) + 1);
  std::vector<Eigen::MatrixXcd> suffix(static_cast<std::size_t>(n) + 1);
  prefix[0] = Eigen::MatrixXcd::Zero(dim, dim);
  suffix[n] = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + outer(ctx.increment(j));
  for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + outer(ctx.increment(j));

  const GramState empty = GramState::empty(ctx);
  CurvatureReport report;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double single = marginal_gain(empty, j, ctx);
    if (!(single > 0.0)) {
      report.excluded.push_back(j);
      continue;
    }
    // f(A) - f(A - j) is the gain of j on top of everything else.
    Eigen::MatrixXcd rest = prefix[j] + suffix[j + 1];
    rest.diagonal().array() += 1.0;
    Eigen::LLT<Eigen::MatrixXcd> llt(rest);
    if (llt.info() != Eigen::Success) {
      throw NumericalError("curvature: Cholesky factorization failed");
    }
    const GramIncrement& g = ctx.increment(j);
    const Eigen::VectorXcd y = llt.matrixL().solve(g.direction);
    const double drop = std::log1p(g.weight * y.squaredNorm());
    const double ratio = drop / single;
    if (ratio < min_ratio) {
      min_ratio = ratio;
      report.argmin = j;
    }
  }
  if (report.argmin < 0) {
    throw NumericalError(
        "curvature undefined: every singleton objective value is zero");
  }
  report.curvature = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  return report;
}

BoundFactors optimality_bound(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InvalidArgument("curvature must lie in [0, 1]");
  }
  BoundFactors factors;
  factors.tight = c == 0.0 ? 1.0 : -std::expm1(-c) / c;
  factors.loose = -std::expm1(-1.0);
  return factors;
}

Certificate make_certificate(double c, std::optional<double> optimum) {
  const BoundFactors factors = optimality_bound(c);
  return {c, factors.tight, factors.loose, optimum};
}

SubmodularityReport check_submodularity(const ObjectiveContext& ctx, int trials,
                                        Rng& rng, double tolerance) {
  if (trials < 1) throw InvalidArgument("check_submodularity: trials must be >= 1");
  const int n = ctx.size();
  if (n < 1) throw InvalidArgument("check_submodularity: empty ground set");

  SubmodularityReport report;
  report.trials = trials;
  report.tolerance = tolerance;
  report.worst_monotonicity_margin = -std::numeric_limits<double>::infinity();
  report.worst_diminishing_margin = -std::numeric_limits<double>::infinity();

  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < trials; ++t) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    others.clear();
    for (int v = 0; v < n; ++v) {
      if (v != u) others.push_back(v);
    }
    const auto t_size = rng.below(others.size() + 1);
    for (std::uint64_t i = 0; i < t_size; ++i) {
      const std::uint64_t j = i + rng.below(others.size() - i);
      std::swap(others[i], others[j]);
    }
    const auto s_size = rng.below(t_size + 1);
    // `others` is in random order, so its prefixes are uniform subsets.
    const std::span<const int> big(others.data(), t_size);
    const std::span<const int> small(others.data(), s_size);

    const GramState s_state = GramState::from_selection(ctx, small);
    const GramState t_state = GramState::from_selection(ctx, big);
    const double mono = s_state.value() - t_state.value();
    const double diminishing =
        marginal_gain(t_state, u, ctx) - marginal_gain(s_state, u, ctx);

    report.worst_monotonicity_margin =
        std::max(report.worst_monotonicity_margin, mono);
    report.worst_diminishing_margin =
        std::max(report.worst_diminishing_margin, diminishing);
    if (mono > tolerance) ++report.monotonicity_violations;
    if (diminishing > tolerance) ++report.diminishing_returns_violations;
  }
  return report;
}

}  // namespace irs
