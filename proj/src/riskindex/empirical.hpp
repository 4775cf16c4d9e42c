/*
 * Copyright 2026 the riskindex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKINDEX_EMPIRICAL_HPP
#define RISKINDEX_EMPIRICAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace riskindex {

// Weighted atoms on the real line, the computational stand-in for the law
// of a position. Atoms are stored sorted by value with exactly equal values
// merged; weights are strictly positive and sum to one.
class EmpiricalDistribution {
 public:
  // Sorts, merges exactly-equal values and renormalizes. The total weight
  // must already be within 1e-9 of one; anything else is a hard error, not
  // a silent rescale.
  static EmpiricalDistribution from_points(const std::vector<std::pair<double, double>>& points);

  // Atoms assumed valid (used internally after transformations that
  // preserve the invariants).
  static EmpiricalDistribution from_sorted_unchecked(std::vector<double> values,
                                                     std::vector<double> weights);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }

  double min_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }

  // Law of -X.
  EmpiricalDistribution negated() const;
  // Law of c*X + shift.
  EmpiricalDistribution scaled(double c, double shift = 0.0) const;

 private:
  EmpiricalDistribution() = default;
  std::vector<double> values_;
  std::vector<double> weights_;
};

EmpiricalDistribution make_empirical(const std::vector<std::pair<double, double>>& points);

// Right-continuous distribution function P(X <= x).
double cdf(const EmpiricalDistribution& d, double x);
// P(X < x).
double cdf_strict(const EmpiricalDistribution& d, double x);
// Lower quantile inf{x : F(x) >= t}, defined for t in (0,1].
double quantile(const EmpiricalDistribution& d, double t);
// Upper quantile inf{x : F(x) > t}, defined for t in [0,1).
double upper_quantile(const EmpiricalDistribution& d, double t);

bool same_law(const EmpiricalDistribution& a, const EmpiricalDistribution& b, double tol);

double mean(const EmpiricalDistribution& d);
double variance(const EmpiricalDistribution& d);

// E[|X|^p] / p, the psi_p functional of the robustness metric.
double psi_p_moment(const EmpiricalDistribution& d, double p);

// (E[|X|^p])^(1/p); p = +inf gives the sup norm.
double lp_norm(const EmpiricalDistribution& d, double p);

}  // namespace riskindex

#endif  // RISKINDEX_EMPIRICAL_HPP
