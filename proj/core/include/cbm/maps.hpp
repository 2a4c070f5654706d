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

#ifndef CBM_MAPS_HPP_
#define CBM_MAPS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cbm/geometry.hpp"

namespace cbm {

/// One entry of the closed catalog of analytic maps.
///
/// Each map is evaluated on the closure of its source domain (boundary
/// evaluation is what exit laws need); points within 1e-12 of a pole raise
/// PoleError and points outside the closed domain raise DomainError.
///
///   kind                   formula                 source domain
///   Tan4                   tan(pi z / 4)           |Re z| <= 1
///   MobiusRightHalfToDisk  -i (z - 1) / (z + 1)    Re z >= 0
///   DiskToUpperHalf        -i (z - 1) / (z + 1)    |z| <= 1
///   UpperHalfToDisk        (z - i) / (z + i)       Im z >= 0
///   DiskAutomorphism(a)    (z - a) / (1 - conj(a) z)   |z| <= 1
///   ExpWrap                exp(i z)                Im z >= 0
///   Scale(v)               v z                     plane
///   ArcTan                 atan(z), principal      |z| <= 1
class ConformalMap {
 public:
  enum class Kind {
    kTan4,
    kMobiusRightHalfToDisk,
    kDiskToUpperHalf,
    kUpperHalfToDisk,
    kDiskAutomorphism,
    kExpWrap,
    kScale,
    kArcTan,
  };

  static ConformalMap Tan4() { return ConformalMap(Kind::kTan4); }
  static ConformalMap MobiusRightHalfToDisk() { return ConformalMap(Kind::kMobiusRightHalfToDisk); }
  static ConformalMap DiskToUpperHalf() { return ConformalMap(Kind::kDiskToUpperHalf); }
  static ConformalMap UpperHalfToDisk() { return ConformalMap(Kind::kUpperHalfToDisk); }
  static ConformalMap DiskAutomorphism(ComplexPoint a);
  static ConformalMap ExpWrap() { return ConformalMap(Kind::kExpWrap); }
  static ConformalMap Scale(double v);
  static ConformalMap ArcTan() { return ConformalMap(Kind::kArcTan); }

  static std::vector<ConformalMap> catalog_samples();

  Kind kind() const { return kind_; }
  Complex parameter() const { return param_; }
  std::string name() const;

  // Closure of the source domain, with 1e-12 slack.
  bool in_domain(Complex z) const;
  bool near_pole(Complex z) const;
  // ExpWrap is the only kind that is not one-to-one on its domain.
  bool injective() const { return kind_ != Kind::kExpWrap; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  // Inverse on the image domain; principal branch (-i log w) for ExpWrap.
  Complex inverse(Complex w) const;

 private:
  explicit ConformalMap(Kind kind, Complex param = {}) : kind_(kind), param_(param) {}
  void check(Complex z) const;

  Kind kind_;
  Complex param_;
};

ComplexPoint map_eval(const ConformalMap& m, const ComplexPoint& z);

// |f'(z)|^2, the integrand of the Brownian time change.
double map_derivative_abs_sq(const ConformalMap& m, const ComplexPoint& z);

ComplexPoint map_inverse(const ConformalMap& m, const ComplexPoint& w);

/// Points of f^{-1}(w) lying on `source`, the curve the preimages live on.
///
/// Injective maps give the single preimage. ExpWrap with `source` the line
/// Im z = c and w on the circle |w| = exp(-c) gives the 2N+1 points
/// arg(w) + 2 pi k + i c, |k| <= N, in increasing k. Throws DomainError when
/// w is not on the image of `source` (preimage farther than 1e-10 from it).
std::vector<ComplexPoint> preimages_on_curve(const ConformalMap& m, const ComplexPoint& w,
                                             const Curve& source, std::size_t truncation);

}  // namespace cbm

#endif  // CBM_MAPS_HPP_
