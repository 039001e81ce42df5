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

#ifndef IRS_OPTIMIZER_HPP_
#define IRS_OPTIMIZER_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "irs/objective.hpp"
#include "irs/rng.hpp"

namespace irs {

enum class Method { kGreedy, kLazyGreedy, kRandom, kExhaustive };

std::string_view to_string(Method method);
// Accepts "greedy", "lazy" (or "lazy-greedy"), "random", "exhaustive".
Method parse_method(std::string_view name);

struct SelectionResult {
  std::vector<int> chosen;     // in pick order
  std::vector<double> gains;   // gains[k] = values[k] - values[k-1]
  std::vector<double> values;  // cumulative f after each pick
  double final_value = 0.0;
  Method method = Method::kGreedy;
  // marginal_gain calls (greedy variants) or subsets scored (exhaustive).
  std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Each round scans every unselected candidate and takes the largest marginal
// gain, lowest index on ties. Throws InvalidArgument unless
// 1 <= budget <= ctx.size().
SelectionResult greedy_place(const ObjectiveContext& ctx, int budget);

// Same picks as greedy_place, using stale gains as upper bounds in a max-heap.
SelectionResult lazy_greedy_place(const ObjectiveContext& ctx, int budget);

// `budget` distinct candidates drawn uniformly without replacement.
SelectionResult random_place(const ObjectiveContext& ctx, int budget, Rng& rng);

// Exact maximizer over all budget-subsets, enumerated lexicographically;
// ties keep the lexicographically smallest tuple. Throws InfeasibleError
// when the subset count exceeds `cap`.
SelectionResult exhaustive_place(const ObjectiveContext& ctx, int budget,
                                 std::uint64_t cap = kDefaultEnumerationCap);

struct CurvatureReport {
  double curvature = 0.0;
  int argmin = -1;            // candidate attaining the minimum ratio
  std::vector<int> excluded;  // candidates with f({j}) == 0
};

// c = 1 - min_j (f(A) - f(A - j)) / f({j}), clamped to [0, 1]. Throws
// NumericalError when every singleton value is zero.
CurvatureReport curvature(const ObjectiveContext& ctx);

struct BoundFactors {
  double tight = 1.0;  // (1 - e^-c) / c, 1 at c = 0
  double loose = 0.0;  // 1 - 1/e
};

// Throws InvalidArgument for c outside [0, 1].
BoundFactors optimality_bound(double c);

struct Certificate {
  double curvature = 0.0;
  double tight_factor = 1.0;
  double loose_factor = 0.0;
  std::optional<double> optimum;  // f(S*) when it was computed
};

Certificate make_certificate(double c, std::optional<double> optimum = {});

struct SubmodularityReport {
  int trials = 0;
  int monotonicity_violations = 0;
  int diminishing_returns_violations = 0;
  // max over trials of f(S) - f(S u T); <= 0 when monotone.
  double worst_monotonicity_margin = 0.0;
  // max over trials of gain(T, u) - gain(S, u); <= 0 when submodular.
  double worst_diminishing_margin = 0.0;
  double tolerance = 1e-9;

  bool passed() const {
    return monotonicity_violations == 0 && diminishing_returns_violations == 0;
  }
};

// Samples u from A, then T within A - u and S within T, and checks
// f(S u T) >= f(S) and gain(S, u) >= gain(T, u) up to `tolerance`.
SubmodularityReport check_submodularity(const ObjectiveContext& ctx, int trials,
                                        Rng& rng, double tolerance = 1e-9);

}  // namespace irs

#endif  // IRS_OPTIMIZER_HPP_
