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

#ifndef CBM_BOUNDARY_DENSITY_HPP_
#define CBM_BOUNDARY_DENSITY_HPP_

#include <cstddef>
#include <functional>
#include <string>

#include "cbm/geometry.hpp"
#include "cbm/maps.hpp"

namespace cbm {

// A nonnegative density per unit arclength on a boundary curve, expressed as
// a function of the curve parameter.
class BoundaryDensity {
 public:
  using Fn = std::function<double(double)>;

  BoundaryDensity(Curve curve, Fn density, std::string support = {});

  const Curve& curve() const { return curve_; }
  const std::string& support() const { return support_; }

  double at_param(double param) const;
  double at(const ComplexPoint& p) const;

  // Integral against arclength over the whole curve: one turn for circles,
  // the full line otherwise.
  double total_mass() const;

 private:
  Curve curve_;
  Fn density_;
  std::string support_;
};

// Exit law of the unit disk from the centre: 1/(2 pi) per unit arclength.
BoundaryDensity uniform_circle_density();
// Exit law of the upper half-plane from v i, on the real line.
BoundaryDensity halfplane_exit_density(double v);

/// Density of f(B_tau) at w on f(curve), given the density of B_tau on curve:
/// the sum over z in f^{-1}(w) on the curve of rho(z) / |f'(z)|. Preimages are
/// enumerated by preimages_on_curve with the given truncation. The image of
/// infinity, where the inverse has a pole, gets density 0.
double push_density(const ConformalMap& m, const BoundaryDensity& src, const ComplexPoint& w,
                    std::size_t truncation);

// The pushed density as a BoundaryDensity on `target`, for injective maps.
BoundaryDensity pushed(const ConformalMap& m, const BoundaryDensity& src, const Curve& target);

}  // namespace cbm

#endif  // CBM_BOUNDARY_DENSITY_HPP_
