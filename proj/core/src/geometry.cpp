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

#include "cbm/geometry.hpp"

#include <cmath>

#include "cbm/error.hpp"

namespace cbm {

ComplexPoint::ComplexPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("ComplexPoint: coordinates must be finite");
  }
}

DomainSpec DomainSpec::Disk(double radius) {
  if (!(radius > 0.0)) throw DomainError("Disk: radius must be positive");
  return DomainSpec(Kind::kDisk, radius);
}

DomainSpec DomainSpec::Strip(double halfwidth) {
  if (!(halfwidth > 0.0)) throw DomainError("Strip: halfwidth must be positive");
  return DomainSpec(Kind::kStrip, halfwidth);
}

bool DomainSpec::contains(Complex z) const {
  switch (kind_) {
    case Kind::kDisk:
      return std::norm(z) < size_ * size_;
    case Kind::kHalfPlaneUpper:
      return z.imag() > 0.0;
    case Kind::kHalfPlaneRight:
      return z.real() > 0.0;
    case Kind::kStrip:
    case Kind::kStripQuarterPi:
      return std::abs(z.real()) < size_;
    case Kind::kPuncturedDisk: {
      // abs, not norm: |z|^2 underflows to 0 for tiny nonzero z.
      const double r = std::abs(z);
      return r > 0.0 && r < 1.0;
    }
  }
  return false;
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case Kind::kDisk:
      return "Disk(" + std::to_string(size_) + ")";
    case Kind::kHalfPlaneUpper:
      return "HalfPlaneUpper";
    case Kind::kHalfPlaneRight:
      return "HalfPlaneRight";
    case Kind::kStrip:
      return "Strip(" + std::to_string(size_) + ")";
    case Kind::kPuncturedDisk:
      return "PuncturedDisk";
    case Kind::kStripQuarterPi:
      return "StripQuarterPi";
  }
  return "?";
}

Curve Curve::Circle(double radius) {
  if (!(radius > 0.0)) throw DomainError("Circle: radius must be positive");
  return Curve(Kind::kCircle, radius);
}

Complex Curve::point(double param) const {
  switch (kind_) {
    case Kind::kCircle:
      return std::polar(level_, param);
    case Kind::kVerticalLine:
      return {level_, param};
    case Kind::kHorizontalLine:
      return {param, level_};
  }
  return {};
}

double Curve::param(Complex z) const {
  switch (kind_) {
    case Kind::kCircle:
      return std::arg(z);
    case Kind::kVerticalLine:
      return z.imag();
    case Kind::kHorizontalLine:
      return z.real();
  }
  return 0.0;
}

double Curve::arclength_scale() const { return kind_ == Kind::kCircle ? level_ : 1.0; }

double Curve::distance(Complex z) const {
  switch (kind_) {
    case Kind::kCircle:
      return std::abs(std::abs(z) - level_);
    case Kind::kVerticalLine:
      return std::abs(z.real() - level_);
    case Kind::kHorizontalLine:
      return std::abs(z.imag() - level_);
  }
  return 0.0;
}

}  // namespace cbm
