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

#include <cmath>

#include <gtest/gtest.h>

#include "cbm/boundary_density.hpp"
#include "cbm/error.hpp"
#include "cbm/maps.hpp"
#include "cbm/oracles.hpp"

namespace cbm {
namespace {

TEST(BoundaryDensity, ExitLawsHaveUnitMass) {
  EXPECT_NEAR(uniform_circle_density().total_mass(), 1.0, 1e-12);
  for (double v : {0.5, 1.0, 2.0}) {
    const double mass = halfplane_exit_density(v).total_mass();
    EXPECT_LE(mass, 1.0 + 1e-12);
    EXPECT_GE(mass, 1.0 - 1e-8);
  }
}

TEST(PushDensity, ScalePreservesCauchyFamily) {
  const BoundaryDensity src = halfplane_exit_density(1.0);
  for (double v : {0.5, 2.0, 3.0}) {
    const auto m = ConformalMap::Scale(v);
    for (double x : {-3.0, -0.2, 0.0, 1.0, 10.0}) {
      EXPECT_NEAR(push_density(m, src, ComplexPoint(v * x, 0.0), 0), cauchy_halfplane(v, v * x), 1e-15);
    }
  }
}

TEST(PushDensity, AutomorphismGivesPoissonKernel) {
  // Uniform exit law from 0 pushed through the automorphism taking 0 to a.
  for (const ComplexPoint a : {ComplexPoint(0.5, 0.0), ComplexPoint(0.3, -0.6), ComplexPoint(-0.9, 0.1)}) {
    const auto m = ConformalMap::DiskAutomorphism(ComplexPoint(-a.re(), -a.im()));
    for (double theta = -3.0; theta < 3.2; theta += 0.5) {
      const ComplexPoint w(std::cos(theta), std::sin(theta));
      EXPECT_NEAR(push_density(m, uniform_circle_density(), w, 0), poisson_disk(a, theta),
                  1e-12 * poisson_disk(a, theta));
    }
  }
}

TEST(PushDensity, ExpWrapGivesWrappedCauchySum) {
  const double a = 0.5;
  const double v = -std::log(a);
  const BoundaryDensity src = halfplane_exit_density(v);
  for (double theta : {0.0, 1.0, kPi / 2, kPi}) {
    const ComplexPoint w(std::cos(theta), std::sin(theta));
    for (std::size_t n : {0u, 3u, 50u}) {
      EXPECT_NEAR(push_density(ConformalMap::ExpWrap(), src, w, n), punctured_disk_exit_series(a, theta, n),
                  1e-14);
    }
  }
}

TEST(PushDensity, ExpWrapTelescopes) {
  const BoundaryDensity src = halfplane_exit_density(0.7);
  const auto m = ConformalMap::ExpWrap();
  const double theta = 2.0;
  const ComplexPoint w(std::cos(theta), std::sin(theta));
  double previous = push_density(m, src, w, 0);
  for (std::size_t n = 0; n < 40; ++n) {
    const double next = push_density(m, src, w, n + 1);
    const double k = static_cast<double>(n + 1);
    const double pair = cauchy_halfplane(0.7, theta + 2.0 * kPi * k) + cauchy_halfplane(0.7, theta - 2.0 * kPi * k);
    EXPECT_NEAR(next - previous, pair, 1e-15);
    EXPECT_GE(next, previous);
    previous = next;
  }
}

TEST(PushDensity, InvertibleMapsPreserveMass) {
  // Half-plane exit law from i pushed to the unit circle.
  const auto to_disk = ConformalMap::UpperHalfToDisk();
  const BoundaryDensity on_circle = pushed(to_disk, halfplane_exit_density(1.0), Curve::Circle(1.0));
  EXPECT_NEAR(on_circle.total_mass(), 1.0, 1e-6);
  // From i the image starts at 0, so the pushed law is uniform.
  EXPECT_NEAR(on_circle.at_param(0.3), 1.0 / (2.0 * kPi), 1e-12);

  const auto psi = ConformalMap::DiskAutomorphism(ComplexPoint(0.2, 0.5));
  EXPECT_NEAR(pushed(psi, uniform_circle_density(), Curve::Circle(1.0)).total_mass(), 1.0, 1e-6);

  const auto to_half = ConformalMap::DiskToUpperHalf();
  EXPECT_NEAR(pushed(to_half, uniform_circle_density(), Curve::HorizontalLine(0.0)).total_mass(), 1.0, 1e-6);
}

TEST(PushDensity, NonInjectiveMapCannotBePushedWholesale) {
  EXPECT_THROW(pushed(ConformalMap::ExpWrap(), halfplane_exit_density(1.0), Curve::Circle(1.0)), DomainError);
}

}  // namespace
}  // namespace cbm
