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

#ifndef CBM_GEOMETRY_HPP_
#define CBM_GEOMETRY_HPP_

#include <complex>
#include <string>

namespace cbm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// A point of the plane. Both coordinates are finite; construction from a
// non-finite value throws DomainError.
class ComplexPoint {
 public:
  constexpr ComplexPoint() = default;
  ComplexPoint(double re, double im);
  explicit ComplexPoint(Complex z) : ComplexPoint(z.real(), z.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  Complex value() const { return {re_, im_}; }
  double abs() const { return std::abs(value()); }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

// The closed catalog of planar domains. Membership is strict: boundary
// points are outside.
class DomainSpec {
 public:
  enum class Kind {
    kDisk,            // |z| < radius
    kHalfPlaneUpper,  // Im z > 0
    kHalfPlaneRight,  // Re z > 0
    kStrip,           // |Re z| < halfwidth
    kPuncturedDisk,   // 0 < |z| < 1
    kStripQuarterPi,  // |Re z| < pi/4
  };

  static DomainSpec Disk(double radius = 1.0);
  static DomainSpec HalfPlaneUpper() { return DomainSpec(Kind::kHalfPlaneUpper, 0.0); }
  static DomainSpec HalfPlaneRight() { return DomainSpec(Kind::kHalfPlaneRight, 0.0); }
  static DomainSpec Strip(double halfwidth);
  static DomainSpec PuncturedDisk() { return DomainSpec(Kind::kPuncturedDisk, 1.0); }
  static DomainSpec StripQuarterPi() { return DomainSpec(Kind::kStripQuarterPi, kPi / 4); }

  Kind kind() const { return kind_; }
  // Radius for disks, halfwidth for strips, 0 for half-planes.
  double size() const { return size_; }

  bool contains(Complex z) const;
  bool contains(const ComplexPoint& p) const { return contains(p.value()); }

  std::string name() const;

 private:
  DomainSpec(Kind kind, double size) : kind_(kind), size_(size) {}

  Kind kind_;
  double size_;
};

// Boundary curves used by exit laws: circles about the origin and
// axis-parallel lines. The curve parameter is the polar angle for circles
// (arclength = radius * angle), Im z on vertical lines and Re z on
// horizontal lines.
class Curve {
 public:
  enum class Kind { kCircle, kVerticalLine, kHorizontalLine };

  static Curve Circle(double radius = 1.0);
  static Curve VerticalLine(double re) { return Curve(Kind::kVerticalLine, re); }
  static Curve HorizontalLine(double im) { return Curve(Kind::kHorizontalLine, im); }

  Kind kind() const { return kind_; }
  // Radius of the circle, or the fixed coordinate of the line.
  double level() const { return level_; }

  Complex point(double param) const;
  double param(Complex z) const;
  // d(arclength)/d(param).
  double arclength_scale() const;
  double distance(Complex z) const;

 private:
  Curve(Kind kind, double level) : kind_(kind), level_(level) {}

  Kind kind_;
  double level_;
};

}  // namespace cbm

#endif  // CBM_GEOMETRY_HPP_
