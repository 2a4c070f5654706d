// Copyright 2026 The conformal_bm Authors.
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

#ifndef CBM_STATS_HPP_
#define CBM_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cbm/estimate.hpp"

namespace cbm {

struct GoodnessOfFit {
  enum class Kind { kKS, kChiSquare };

  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  Kind kind = Kind::kKS;
};

// Sample mean with standard error sd / sqrt(n). Throws InsufficientData for
// n < 2.
McEstimate mean_ci(std::span<const double> samples, std::uint64_t seed = 0);

// P(K > x) for the Kolmogorov limit distribution.
double kolmogorov_survival(double x);
// D such that the asymptotic one-sample p-value at n samples equals alpha.
double ks_critical_value(double alpha, std::size_t n);

/// One-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// P(K > sqrt(n) D_n). Throws InsufficientData below 10 samples.
GoodnessOfFit ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

// Probabilities of `bins` equal arcs of [-pi, pi) under a density per unit
// arclength on the unit circle, by adaptive quadrature.
std::vector<double> circle_bin_probabilities(const std::function<double(double)>& density,
                                             std::size_t bins);

/// Pearson chi-square test of angles against a circle density with
/// bins - 1 degrees of freedom. Throws BinUnderflow when an expected count is
/// below 5 and DomainError when bins < 4.
GoodnessOfFit chi_square_circle(std::span<const double> angles,
                                const std::function<double(double)>& density, std::size_t bins);

double chi_square_critical_value(double alpha, std::size_t dof);

}  // namespace cbm

#endif  // CBM_STATS_HPP_
