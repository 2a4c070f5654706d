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

#ifndef CBM_ORACLES_HPP_
#define CBM_ORACLES_HPP_

#include <cstddef>

#include "cbm/geometry.hpp"

// Closed-form exit densities, exit times and Green's functions.
//
// Conventions: each Brownian coordinate has variance t at time t. Exit
// densities are per unit arclength. Green's functions carry a 1/pi
// normalisation: G(a, z) is the density of expected occupation time, so
// G_disk(0, z) = (1/pi) ln(1/|z|). Analysis texts using the Laplacian
// normalisation differ from this by a factor 2 pi.

namespace cbm {

// Exit density of the unit disk at e^{i theta} from a, |a| < 1.
double poisson_disk(const ComplexPoint& a, double theta);
// P(arg B_tau in [-pi, theta]) for the same law, theta in [-pi, pi].
double poisson_disk_cdf(const ComplexPoint& a, double theta);

// Exit density of the upper half-plane at x from v i.
double cauchy_halfplane(double v, double x);
double cauchy_halfplane_cdf(double v, double x);

// Density of B at the first hitting time of the line Re z = r, evaluated at
// the hitting point level with the start: 1 / (pi |r - Re a|).
double cauchy_shifted(const ComplexPoint& a, double r);

/// Exit density of the punctured disk at e^{i theta} from a in (0,1), as the
/// symmetric partial sum over |k| <= N of
///   -ln a / (pi ((ln a)^2 + (theta + 2 pi k)^2)).
double punctured_disk_exit_series(double a, double theta, std::size_t truncation);

/// Upper bound on |series(N) - poisson_disk(a, theta)|, from comparing the
/// omitted terms with an integral: -ln a / (pi^2 (2 pi N - |theta|)).
/// Requires 2 pi N > |theta|.
double punctured_disk_tail_bound(double a, double theta, std::size_t truncation);

// Exit density of W = {|Re z| < 1} at the boundary point 1, start a in (-1,1).
double strip_exit_density_closed(double a);
// Exit density of W at 1 + i y from a real start a, via Tan4.
double strip_side_density(double a, double y);
// P(exit W through Re z = 1) by quadrature of strip_side_density.
double strip_right_exit_probability(double a);

// E_a[tau] for the strip |Re z| < h from a real-part start a: h^2 - a^2.
double expected_exit_time_strip(double halfwidth, double a);

double greens_halfplane(const ComplexPoint& a, const ComplexPoint& z);
double greens_disk(const ComplexPoint& a, const ComplexPoint& z);

// Integral of greens_disk(a, .) over the annular cell
// [r0, r1] x [theta0, theta1] in polar coordinates.
double greens_disk_cell_integral(const ComplexPoint& a, double r0, double r1, double theta0,
                                 double theta1);

class GreensFunctionSpec {
 public:
  enum class Kind { kHalfPlaneUpper, kDisk, kPuncturedDiskSeries };

  GreensFunctionSpec(Kind kind, ComplexPoint pole, std::size_t truncation = 0)
      : kind_(kind), pole_(pole), truncation_(truncation) {}

  Kind kind() const { return kind_; }
  const ComplexPoint& pole() const { return pole_; }

  // The punctured-disk kind accepts real pole and z in (0,1) only.
  double operator()(const ComplexPoint& z) const;

 private:
  Kind kind_;
  ComplexPoint pole_;
  std::size_t truncation_;
};

}  // namespace cbm

#endif  // CBM_ORACLES_HPP_
