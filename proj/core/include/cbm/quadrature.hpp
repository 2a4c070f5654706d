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

#ifndef CBM_QUADRATURE_HPP_
#define CBM_QUADRATURE_HPP_

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cbm/geometry.hpp"

namespace cbm {

// Adaptive Gauss-Kronrod on a finite interval.
template <class F>
double integrate(F&& f, double lo, double hi, double tol = 1e-13) {
  using boost::math::quadrature::gauss_kronrod;
  // Depth 15 is the Boost default; deeper recursion only chases roundoff.
  return gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, tol);
}

// Integral over the real line through x = tan(t). Suitable for densities with
// at least 1/x^2 decay.
template <class F>
double integrate_line(F&& f, double tol = 1e-13) {
  auto g = [&f](double t) {
    const double c = std::cos(t);
    return f(std::tan(t)) / (c * c);
  };
  return integrate(g, -kPi / 2, 0.0, tol) + integrate(g, 0.0, kPi / 2, tol);
}

}  // namespace cbm

#endif  // CBM_QUADRATURE_HPP_
