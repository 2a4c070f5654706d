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

#include "cbm/oracles.hpp"

#include <cmath>
#include <limits>

#include "cbm/error.hpp"
#include "cbm/maps.hpp"
#include "cbm/quadrature.hpp"
#include "cbm/series.hpp"

namespace cbm {
namespace {

constexpr double kSingularRadius = 1e-14;

void require_in_disk(const ComplexPoint& a, const char* what) {
  if (!(a.abs() < 1.0)) throw DomainError(std::string(what) + ": |a| must be < 1");
}

// Integral of the unit-disk exit law from a real start r >= 0 over
// [-pi, t], extended so that G(t + 2 pi) = G(t) + 1.
double poisson_angle_cdf(double r, double t) {
  const double k = std::floor((t + kPi) / (2.0 * kPi));
  const double s = t - 2.0 * kPi * k;  // in [-pi, pi)
  const double c = (1.0 + r) / (1.0 - r);
  return k + 0.5 + std::atan(c * std::tan(0.5 * s)) / kPi;
}

}  // namespace

double poisson_disk(const ComplexPoint& a, double theta) {
  require_in_disk(a, "poisson_disk");
  const Complex d = 1.0 - std::conj(a.value()) * std::polar(1.0, theta);
  return (1.0 - std::norm(a.value())) / (2.0 * kPi * std::norm(d));
}

double poisson_disk_cdf(const ComplexPoint& a, double theta) {
  require_in_disk(a, "poisson_disk_cdf");
  if (theta <= -kPi) return 0.0;
  if (theta >= kPi) return 1.0;
  const double r = a.abs();
  const double phi = r > 0.0 ? std::arg(a.value()) : 0.0;
  return poisson_angle_cdf(r, theta - phi) - poisson_angle_cdf(r, -kPi - phi);
}

double cauchy_halfplane(double v, double x) {
  if (!(v > 0.0)) throw DomainError("cauchy_halfplane: v must be positive");
  return v / (kPi * (v * v + x * x));
}

double cauchy_halfplane_cdf(double v, double x) {
  if (!(v > 0.0)) throw DomainError("cauchy_halfplane_cdf: v must be positive");
  return 0.5 + std::atan(x / v) / kPi;
}

double cauchy_shifted(const ComplexPoint& a, double r) {
  const double d = std::abs(r - a.re());
  if (d == 0.0) throw DomainError("cauchy_shifted: start lies on the line");
  return 1.0 / (kPi * d);
}

double punctured_disk_exit_series(double a, double theta, std::size_t truncation) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("punctured_disk_exit_series: a must be in (0,1)");
  const double v = -std::log(a);
  const double v2 = v * v;
  auto term = [&](double k) {
    const double x = theta + 2.0 * kPi * k;
    return v / (kPi * (v2 + x * x));
  };
  // Smallest terms first.
  double sum = 0.0;
  for (std::size_t k = truncation; k >= 1; --k) {
    const auto kd = static_cast<double>(k);
    sum += term(kd) + term(-kd);
  }
  return sum + term(0.0);
}

double punctured_disk_tail_bound(double a, double theta, std::size_t truncation) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("punctured_disk_tail_bound: a must be in (0,1)");
  const double gap = 2.0 * kPi * static_cast<double>(truncation) - std::abs(theta);
  if (!(gap > 0.0)) return std::numeric_limits<double>::infinity();
  return -std::log(a) / (kPi * kPi * gap);
}

double strip_exit_density_closed(double a) {
  if (!(a > -1.0 && a < 1.0)) throw DomainError("strip_exit_density_closed: a must be in (-1,1)");
  const double t = std::tan(kPi * a / 4.0);
  return (1.0 + t) / (4.0 * (1.0 - t));
}

double strip_side_density(double a, double y) {
  if (!(a > -1.0 && a < 1.0)) throw DomainError("strip_side_density: a must be in (-1,1)");
  const auto tan4 = ConformalMap::Tan4();
  const Complex z{1.0, y};
  const Complex w = tan4(z);
  const double jac = std::abs(tan4.derivative(z));
  if (jac == 0.0) return 0.0;
  return poisson_disk(ComplexPoint(std::tan(kPi * a / 4.0), 0.0), std::arg(w)) * jac;
}

double strip_right_exit_probability(double a) {
  if (!(a > -1.0 && a < 1.0)) {
    throw DomainError("strip_right_exit_probability: a must be in (-1,1)");
  }
  return integrate_line([a](double y) { return strip_side_density(a, y); }, 1e-12);
}

double expected_exit_time_strip(double halfwidth, double a) {
  if (!(std::abs(a) < halfwidth)) throw DomainError("expected_exit_time_strip: need |a| < h");
  return (halfwidth - a) * (halfwidth + a);
}

double greens_halfplane(const ComplexPoint& a, const ComplexPoint& z) {
  if (!(a.im() > 0.0)) throw DomainError("greens_halfplane: pole must satisfy Im a > 0");
  if (z.im() < 0.0) throw DomainError("greens_halfplane: Im z must be >= 0");
  const double d = std::abs(a.value() - z.value());
  if (d < kSingularRadius) throw SingularityError("greens_halfplane: z at the pole");
  return std::log(std::abs(a.value() - std::conj(z.value())) / d) / kPi;
}

double greens_disk(const ComplexPoint& a, const ComplexPoint& z) {
  require_in_disk(a, "greens_disk");
  if (z.abs() > 1.0) throw DomainError("greens_disk: |z| must be <= 1");
  const double d = std::abs(z.value() - a.value());
  if (d < kSingularRadius) throw SingularityError("greens_disk: z at the pole");
  return std::log(std::abs(1.0 - std::conj(a.value()) * z.value()) / d) / kPi;
}

double greens_disk_cell_integral(const ComplexPoint& a, double r0, double r1, double theta0,
                                 double theta1) {
  require_in_disk(a, "greens_disk_cell_integral");
  if (!(0.0 <= r0 && r0 < r1 && r1 <= 1.0 && theta0 < theta1)) {
    throw DomainError("greens_disk_cell_integral: bad cell");
  }
  const Complex av = a.value();
  const Complex ab = std::conj(av);
  auto radial = [&](double theta) {
    const Complex e = std::polar(1.0, theta);
    return integrate(
        [&](double r) {
          const Complex z = r * e;
          const double d = std::max(std::abs(z - av), std::numeric_limits<double>::min());
          return r * std::log(std::abs(1.0 - ab * z) / d) / kPi;
        },
        r0, r1, 1e-11);
  };
  return integrate(radial, theta0, theta1, 1e-11);
}

double GreensFunctionSpec::operator()(const ComplexPoint& z) const {
  switch (kind_) {
    case Kind::kHalfPlaneUpper:
      return greens_halfplane(pole_, z);
    case Kind::kDisk:
      return greens_disk(pole_, z);
    case Kind::kPuncturedDiskSeries: {
      const bool ok = pole_.im() == 0.0 && z.im() == 0.0 && pole_.re() > 0.0 &&
                      pole_.re() < 1.0 && z.re() > 0.0 && z.re() < 1.0;
      if (!ok) throw DomainError("punctured-disk Green series: pole and z must be in (0,1)");
      return punctured_disk_greens_series(-std::log(pole_.re()), -std::log(z.re()), truncation_);
    }
  }
  return 0.0;
}

}  // namespace cbm
