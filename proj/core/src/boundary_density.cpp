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

#include "cbm/boundary_density.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "cbm/error.hpp"
#include "cbm/quadrature.hpp"

namespace cbm {

BoundaryDensity::BoundaryDensity(Curve curve, Fn density, std::string support)
    : curve_(curve), density_(std::move(density)), support_(std::move(support)) {}

double BoundaryDensity::at_param(double param) const { return density_(param); }

double BoundaryDensity::at(const ComplexPoint& p) const {
  return density_(curve_.param(p.value()));
}

double BoundaryDensity::total_mass() const {
  if (curve_.kind() == Curve::Kind::kCircle) {
    const double r = curve_.level();
    return r * integrate([this](double t) { return density_(t); }, -kPi, kPi);
  }
  return integrate_line([this](double s) { return density_(s); });
}

BoundaryDensity uniform_circle_density() {
  return BoundaryDensity(Curve::Circle(1.0), [](double) { return 1.0 / (2.0 * kPi); },
                         "unit circle, start 0");
}

BoundaryDensity halfplane_exit_density(double v) {
  if (!(v > 0.0)) throw DomainError("halfplane_exit_density: v must be positive");
  return BoundaryDensity(
      Curve::HorizontalLine(0.0), [v](double x) { return v / (kPi * (v * v + x * x)); },
      "real line, start v i");
}

double push_density(const ConformalMap& m, const BoundaryDensity& src, const ComplexPoint& w,
                    std::size_t truncation) {
  std::vector<ComplexPoint> pre;
  try {
    pre = preimages_on_curve(m, w, src.curve(), truncation);
  } catch (const PoleError&) {
    // w is the image of infinity: a single point with no finite preimage.
    return 0.0;
  }
  auto term = [&](const ComplexPoint& z) {
    return src.at(z) / std::sqrt(map_derivative_abs_sq(m, z));
  };
  // Symmetric pairs k, -k from the outside in; the middle entry is k = 0.
  double sum = 0.0;
  std::size_t lo = 0;
  std::size_t hi = pre.size() - 1;
  while (lo < hi) {
    sum += term(pre[lo]) + term(pre[hi]);
    ++lo;
    --hi;
  }
  if (lo == hi) sum += term(pre[lo]);
  return sum;
}

BoundaryDensity pushed(const ConformalMap& m, const BoundaryDensity& src, const Curve& target) {
  if (!m.injective()) throw DomainError("pushed: map must be injective");
  return BoundaryDensity(
      target,
      [m, src, target](double param) {
        return push_density(m, src, ComplexPoint(target.point(param)), 0);
      },
      "pushed through " + m.name());
}

}  // namespace cbm
