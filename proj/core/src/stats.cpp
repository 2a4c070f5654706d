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

#include "cbm/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "cbm/error.hpp"
#include "cbm/geometry.hpp"
#include "cbm/quadrature.hpp"

namespace cbm {

McEstimate mean_ci(std::span<const double> samples, std::uint64_t seed) {
  if (samples.size() < 2) throw InsufficientData("mean_ci: need at least 2 samples");
  RunningMoments m;
  for (double x : samples) m.add(x);
  return m.estimate(seed);
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.5) {
    // Dual theta series, fast for small x:
    // P(K <= x) = sqrt(2 pi)/x sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 x^2)).
    double cdf = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double m = 2.0 * k - 1.0;
      const double term = std::exp(-m * m * kPi * kPi / (8.0 * x * x));
      cdf += term;
      if (term < 1e-16) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * kPi) / x * cdf, 0.0, 1.0);
  }
  double p = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double term = 2.0 * std::exp(-2.0 * k * k * x * x);
    p += (k % 2 == 1) ? term : -term;
    if (term < 1e-10) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

double ks_critical_value(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0) || n == 0) throw DomainError("ks_critical_value: bad input");
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(mid) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi / std::sqrt(static_cast<double>(n));
}

GoodnessOfFit ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 10) throw InsufficientData("ks_test: need at least 10 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const auto di = static_cast<double>(i);
    d = std::max({d, (di + 1.0) / n - f, f - di / n});
  }
  d = std::clamp(d, 0.0, 1.0);
  return GoodnessOfFit{d, kolmogorov_survival(std::sqrt(n) * d), sorted.size(),
                       GoodnessOfFit::Kind::kKS};
}

std::vector<double> circle_bin_probabilities(const std::function<double(double)>& density,
                                             std::size_t bins) {
  if (bins < 1) throw DomainError("circle_bin_probabilities: need at least one bin");
  const double width = 2.0 * kPi / static_cast<double>(bins);
  std::vector<double> p(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double lo = -kPi + width * static_cast<double>(b);
    p[b] = integrate(density, lo, lo + width, 1e-13);
  }
  return p;
}

GoodnessOfFit chi_square_circle(std::span<const double> angles,
                                const std::function<double(double)>& density, std::size_t bins) {
  if (bins < 4) throw DomainError("chi_square_circle: need at least 4 bins");
  const std::vector<double> p = circle_bin_probabilities(density, bins);
  const auto n = static_cast<double>(angles.size());
  for (double pb : p) {
    if (n * pb < 5.0) throw BinUnderflow("chi_square_circle: expected count below 5");
  }

  std::vector<double> observed(bins, 0.0);
  const double width = 2.0 * kPi / static_cast<double>(bins);
  for (double t : angles) {
    double s = std::remainder(t, 2.0 * kPi);  // [-pi, pi]
    if (s >= kPi) s -= 2.0 * kPi;
    const auto b = std::min(static_cast<std::size_t>((s + kPi) / width), bins - 1);
    observed[b] += 1.0;
  }

  double stat = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double e = n * p[b];
    stat += (observed[b] - e) * (observed[b] - e) / e;
  }
  const double dof = static_cast<double>(bins - 1);
  return GoodnessOfFit{stat, boost::math::gamma_q(0.5 * dof, 0.5 * stat), angles.size(),
                       GoodnessOfFit::Kind::kChiSquare};
}

double chi_square_critical_value(double alpha, std::size_t dof) {
  if (!(alpha > 0.0 && alpha < 1.0) || dof == 0) {
    throw DomainError("chi_square_critical_value: bad input");
  }
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

}  // namespace cbm
